#include "su2branch/branching.hpp"

#include <stdexcept>
#include <string>

namespace su2b {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error("branching: " + what); }

}  // namespace

HeisenbergSubsystem heisenberg_subsystem(const RootSystem& rs, const OrbitTable& orbits) {
  HeisenbergSubsystem hs;
  hs.slices.resize(static_cast<std::size_t>(rs.rank()));
  const Root& psi = rs.highest_root();
  for (std::size_t idx = 0; idx < rs.roots().size(); ++idx) {
    if (rs.inner_product(psi, rs.roots()[idx]) <= 0) continue;
    if (idx >= rs.num_positive()) fail("Phi contains a negative root " + rs.roots()[idx].to_string());
    hs.phi.push_back(idx);
    hs.slices[static_cast<std::size_t>(orbits.entry(idx).orbit)].push_back(idx);
  }
  const auto expected = static_cast<std::size_t>(2 * rs.coxeter_number() - 3);
  if (hs.phi.size() != expected)
    fail("card(Phi) = " + std::to_string(hs.phi.size()) + ", expected 2h - 3 = " + std::to_string(expected));
  return hs;
}

BranchParams branch_params(const RootSystem& rs) {
  BranchParams p;
  p.h = rs.coxeter_number();
  p.g = p.h / 2;
  p.i_star = special_index(rs);
  p.a = 2 * rs.marks()[static_cast<std::size_t>(p.i_star)];
  p.b = p.h + 2 - p.a;
  p.group_order_F = p.a * p.b / 4;
  p.group_order_Fstar = p.a * p.b / 2;
  return p;
}

IntPolynomial z_special_orbit_sum(const RootSystem& rs, const OrbitTable& orbits, const HeisenbergSubsystem& hs,
                                  const BranchParams& params) {
  const std::size_t psi = rs.num_positive() - 1;
  std::vector<std::pair<int, Coeff>> terms{{params.g, 2}};
  for (std::size_t idx : hs.slices.at(static_cast<std::size_t>(params.i_star)))
    if (idx != psi) terms.emplace_back(orbits.entry(idx).n, 1);
  return IntPolynomial::from_terms(terms);
}

IntPolynomial z_special_closed_form(const BranchParams& params) {
  std::vector<std::pair<int, Coeff>> terms{{params.g, 1}};
  for (int e = params.g - params.a + 2; e <= params.g + params.a - 2; e += 2) terms.emplace_back(e, 1);
  return IntPolynomial::from_terms(terms);
}

IntPolynomial z_polynomial(const RootSystem& rs, const OrbitTable& orbits, const HeisenbergSubsystem& hs,
                           const BranchParams& params, int ext_index) {
  if (ext_index < 0 || ext_index > rs.rank()) throw std::out_of_range("z_polynomial: node index out of range");
  if (ext_index == 0) return poly_add(IntPolynomial{1}, IntPolynomial::monomial(params.h));

  const int i = ext_index - 1;
  const int mark = rs.marks()[static_cast<std::size_t>(i)];
  IntPolynomial z;
  if (i == params.i_star) {
    z = z_special_orbit_sum(rs, orbits, hs, params);
    if (z != z_special_closed_form(params))
      fail("special-node orbit sum " + z.to_string() + " differs from closed form " +
           z_special_closed_form(params).to_string());
    if (z[params.g] != 2) fail("coefficient of t^g in z_i* is not 2");
    if (eval_at_one(z) != params.a) fail("z_i*(1) != a");
  } else {
    const auto& slice = hs.slices.at(static_cast<std::size_t>(i));
    if (static_cast<int>(slice.size()) != 2 * mark)
      fail("card(Phi^" + std::to_string(i) + ") = " + std::to_string(slice.size()) + " != 2 d_i");
    std::vector<std::pair<int, Coeff>> terms;
    for (std::size_t idx : slice) terms.emplace_back(orbits.entry(idx).n, 1);
    z = IntPolynomial::from_terms(terms);
  }

  const int k = orbits.signed_simples()[static_cast<std::size_t>(i)].is_positive() ? 1 : 2;
  for (const auto& [e, c] : z.terms()) {
    const bool at_g = i == params.i_star && e == params.g;
    if (c < 0 || c > (at_g ? 2 : 1)) fail("coefficient bound violated in " + z.to_string());
    if (e % 2 != k % 2) fail("parity violated in " + z.to_string());
  }
  if (z.degree() >= params.h) fail("deg z_i >= h");
  if (eval_at_one(z) != 2 * mark) fail("z_i(1) != 2 d_i");
  return z;
}

TruncatedSeries branching_series(const BranchParams& params, const IntPolynomial& z, int order) {
  TruncatedSeries s = series_div_geom(z, params.a, params.b, order);
  for (int n = 0; n <= order; ++n)
    if (s[n] < 0) fail("negative coefficient at t^" + std::to_string(n));
  return s;
}

BranchingModel::BranchingModel(DiagramType dtype)
    : rs_(dtype),
      bp_(bipartition(rs_)),
      cox_(coxeter_element(rs_, bp_)),
      orbits_(rs_, cox_, bp_),
      hs_(heisenberg_subsystem(rs_, orbits_)),
      params_(branch_params(rs_)) {
  if (cox_.order != rs_.coxeter_number()) fail("sigma order differs from h");
  for (int e = 0; e <= rank(); ++e) z_.push_back(z_polynomial(rs_, orbits_, hs_, params_, e));
}

void BranchingModel::check_ext(int ext_index) const {
  if (ext_index < 0 || ext_index > rank()) throw std::out_of_range("extended node index out of range");
}

int BranchingModel::ext_mark(int ext_index) const {
  check_ext(ext_index);
  return ext_index == 0 ? 1 : rs_.marks()[static_cast<std::size_t>(ext_index - 1)];
}

int BranchingModel::ext_part(int ext_index) const {
  check_ext(ext_index);
  return ext_index == 0 ? 2 : bp_.part_of(ext_index - 1);
}

int BranchingModel::ext_distance(int ext_index) const {
  check_ext(ext_index);
  return ext_index == 0 ? 0 : distance_to_affine(rs_, ext_index - 1);
}

const IntPolynomial& BranchingModel::z(int ext_index) const {
  check_ext(ext_index);
  return z_[static_cast<std::size_t>(ext_index)];
}

TruncatedSeries BranchingModel::series(int ext_index, int order) const {
  return branching_series(params_, z(ext_index), order);
}

Coeff BranchingModel::multiplicity(int n, int ext_index) const {
  if (n < 0) throw std::out_of_range("multiplicity: negative n");
  return series(ext_index, n)[n];
}

}  // namespace su2b
