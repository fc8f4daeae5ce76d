#include "su2branch/verify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>

#include "su2branch/binarygroups.hpp"
#include "su2branch/branching.hpp"
#include "su2branch/kernels.hpp"
#include "su2branch/mckay.hpp"

namespace su2b {

TableRow table_closed_form(const DiagramType& dtype) {
  const int l = dtype.rank();
  switch (dtype.family()) {
    case Family::A: {
      const int n = (l + 1) / 2;
      return {"Z_" + std::to_string(n), 2, 2 * n, 2 * n, n};
    }
    case Family::D: {
      const int n = l - 2;
      return {"Delta_" + std::to_string(n), 4, 2 * n, 2 * n + 2, n + 1};
    }
    case Family::E:
      break;
  }
  if (l == 6) return {"Alt_4", 6, 8, 12, 6};
  if (l == 7) return {"Sym_4", 8, 12, 18, 9};
  return {"Alt_5", 12, 20, 30, 15};
}

const std::vector<GoldenPolynomial>& e8_golden_polynomials() {
  static const std::vector<GoldenPolynomial> golden = {
      {2, 1, {{1, 1}, {11, 1}, {19, 1}, {29, 1}}},
      {3, 2, {{2, 1}, {10, 1}, {12, 1}, {18, 1}, {20, 1}, {28, 1}}},
      {4, 3, {{3, 1}, {9, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {21, 1}, {27, 1}}},
      {5, 4, {{4, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {16, 1}, {18, 1}, {20, 1}, {22, 1}, {26, 1}}},
      {6, 5, {{5, 1}, {7, 1}, {9, 1}, {11, 1}, {13, 1}, {15, 2}, {17, 1}, {19, 1}, {21, 1}, {23, 1}, {25, 1}}},
      {4, 6, {{6, 1}, {8, 1}, {12, 1}, {14, 1}, {16, 1}, {18, 1}, {22, 1}, {24, 1}}},
      {2, 7, {{7, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {3, 6, {{6, 1}, {10, 1}, {14, 1}, {16, 1}, {20, 1}, {24, 1}}},
  };
  return golden;
}

bool TypeReport::passed() const {
  return !checks.empty() && std::ranges::all_of(checks, [](const Check& c) { return c.passed; });
}

namespace {

class Recorder {
public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}
  void operator()(std::string name, bool ok, std::string detail = "") {
    out_.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
  }

private:
  std::vector<Check>& out_;
};

std::string str(int v) { return std::to_string(v); }

void check_roots(const BranchingModel& m, Recorder& rec) {
  const RootSystem& rs = m.roots();
  const int l = rs.rank(), h = rs.coxeter_number(), g = h / 2;
  rec("card Delta = h l", static_cast<int>(rs.roots().size()) == h * l, str(static_cast<int>(rs.roots().size())));
  rec("card Delta_+ = g l", static_cast<int>(rs.num_positive()) == g * l, str(static_cast<int>(rs.num_positive())));
  rec("card Delta + l = l (h + 1)", static_cast<int>(rs.roots().size()) + l == l * (h + 1));
  rec("h matches family formula", h == table_closed_form(rs.dtype()).h,
      "h = " + str(h) + ", table " + str(table_closed_form(rs.dtype()).h));
  bool pairings = true;
  for (const Root& x : rs.roots())
    for (const Root& y : rs.roots()) {
      const int p = rs.inner_product(x, y);
      pairings = pairings && p >= -2 && p <= 2;
    }
  rec("(x, y) in [-2, 2] on Delta", pairings);
}

void check_bipartition(const BranchingModel& m, Recorder& rec) {
  const RootSystem& rs = m.roots();
  const Bipartition& bp = m.parts();
  const auto ul = static_cast<std::size_t>(rs.rank());
  bool cover = bp.I1.size() + bp.I2.size() == ul;
  bool orth = true, psi_orth = true;
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j : rs.neighbors(i)) orth = orth && bp.part_of(i) != bp.part_of(j);
    if (bp.part_of(i) == 2)
      psi_orth = psi_orth && rs.inner_product(rs.highest_root(), Root::simple(ul, i)) == 0;
  }
  rec("bipartition covers I", cover);
  rec("each part is pairwise orthogonal", orth);
  rec("Pi_2 orthogonal to psi", psi_orth);
}

void check_orbits(const BranchingModel& m, Recorder& rec) {
  const RootSystem& rs = m.roots();
  const OrbitTable& ot = m.orbits();
  const int l = rs.rank(), h = rs.coxeter_number(), g = h / 2;
  std::vector<int> covered(rs.roots().size(), 0);
  bool sizes = true, positives = true, bijective = true;
  for (int i = 0; i < l; ++i) {
    const auto& orb = ot.orbit(i);
    sizes = sizes && static_cast<int>(orb.size()) == h;
    for (std::size_t idx : orb) ++covered[idx];
    const auto pos = ot.positive_part(i);
    positives = positives && static_cast<int>(pos.size()) == g;
    std::vector<int> image;
    for (std::size_t idx : pos) {
      const auto& e = ot.entry(idx);
      image.push_back(e.k == 1 ? (e.n - 1) / 2 : e.n / 2);
    }
    std::ranges::sort(image);
    const int lo = m.parts().part_of(i) == 1 ? 0 : 1;
    for (int k = 0; k < static_cast<int>(image.size()); ++k) bijective = bijective && image[static_cast<std::size_t>(k)] == lo + k;
  }
  rec("l sigma-orbits of size h", sizes);
  rec("orbits partition Delta", std::ranges::all_of(covered, [](int c) { return c == 1; }));
  rec("each orbit has g positive roots", positives);
  rec("exponent maps are bijections", bijective);

  bool parity = true, steps_ok = true;
  for (std::size_t idx = 0; idx < rs.num_positive(); ++idx) {
    const auto& e = ot.entry(idx);
    parity = parity && e.n >= 1 && e.n <= h && e.n % 2 == e.k % 2;
    const std::size_t target = *rs.index_of(ot.signed_simples()[static_cast<std::size_t>(e.orbit)]);
    steps_ok = steps_ok && m.coxeter().sigma.power(e.steps)(idx) == target;
  }
  rec("n(phi) parity matches k_phi", parity);
  rec("sigma^m(phi) = beta_{i_phi} for the recorded m", steps_ok);
}

void check_heisenberg(const BranchingModel& m, Recorder& rec) {
  const RootSystem& rs = m.roots();
  const BranchParams& p = m.params();
  const auto& hs = m.heisenberg();
  rec("card Phi = 2h - 3", static_cast<int>(hs.phi.size()) == 2 * p.h - 3, str(static_cast<int>(hs.phi.size())));
  rec("psi in Phi", std::ranges::find(hs.phi, rs.num_positive() - 1) != hs.phi.end());
  bool cards = true, at_one = true, degree = true;
  for (int i = 0; i < rs.rank(); ++i) {
    const int d = rs.marks()[static_cast<std::size_t>(i)];
    const int want = i == p.i_star ? 2 * d - 1 : 2 * d;
    cards = cards && static_cast<int>(hs.slices[static_cast<std::size_t>(i)].size()) == want;
    at_one = at_one && eval_at_one(m.z(i + 1)) == 2 * d;
    degree = degree && m.z(i + 1).degree() < p.h;
  }
  rec("card Phi^i = 2 d_i (i != i*)", cards);
  rec("z_i(1) = 2 d_i", at_one);
  rec("z_i*(1) = a", eval_at_one(m.z(p.i_star + 1)) == p.a);
  rec("deg z_i < h", degree);
  const IntPolynomial sum = z_special_orbit_sum(rs, m.orbits(), hs, p);
  const IntPolynomial closed = z_special_closed_form(p);
  rec("z_i* orbit sum equals closed form", sum == closed, sum.to_string() + " vs " + closed.to_string());
  bool symmetric = true;
  for (const auto& [e, c] : closed.terms()) symmetric = symmetric && closed[2 * p.g - e] == c;
  rec("z_i*(t) = t^(2g) z_i*(1/t)", symmetric);
}

void check_params(const BranchingModel& m, const FiniteGroup* group, Recorder& rec) {
  const BranchParams& p = m.params();
  const TableRow row = table_closed_form(m.roots().dtype());
  rec("(a, b, h, g) match table", p.a == row.a && p.b == row.b && p.h == row.h && p.g == row.g,
      "computed (" + str(p.a) + ", " + str(p.b) + ", " + str(p.h) + ", " + str(p.g) + ")");
  rec("b = h + 2 - a", p.b == p.h + 2 - p.a);
  rec("a = 2 d_i*", p.a == 2 * m.roots().marks()[static_cast<std::size_t>(p.i_star)]);
  if (group)
    rec("a b = 2 |F*| (closure)", p.a * p.b == 2 * static_cast<int>(group->order()),
        "|F*| = " + str(static_cast<int>(group->order())));
}

void check_golden(const BranchingModel& m, Recorder& rec) {
  int matched = 0;
  std::string detail;
  for (const auto& gp : e8_golden_polynomials()) {
    for (int e = 1; e < m.num_ext_nodes(); ++e) {
      if (m.ext_mark(e) != gp.mark || m.ext_distance(e) != gp.distance) continue;
      std::vector<std::pair<int, Coeff>> terms(gp.terms.begin(), gp.terms.end());
      if (m.z(e) == IntPolynomial::from_terms(terms))
        ++matched;
      else
        detail += "{" + str(gp.mark) + "}@" + str(gp.distance) + " got " + m.z(e).to_string() + "; ";
    }
  }
  rec("E8 golden z-polynomials (" + str(matched) + "/8)", matched == 8, detail);
}

void check_group(const BranchingModel& m, const FiniteGroup& group, const CharacterTable& table, Recorder& rec) {
  const int l = m.rank();
  rec("class count = l + 1", static_cast<int>(group.num_classes()) == l + 1);
  rec("identity and -identity classes are singletons",
      group.classes()[group.class_of(group.identity())].size() == 1 &&
          group.classes()[group.class_of(group.minus_identity())].size() == 1);
  bool dims = true, parity = true;
  const std::size_t minus = group.class_of(group.minus_identity());
  for (int e = 0; e <= l; ++e) {
    dims = dims && table.dims[static_cast<std::size_t>(e)] == m.ext_mark(e);
    const double sign = m.ext_part(e) == 2 ? 1.0 : -1.0;
    parity = parity && std::abs(table.values[static_cast<std::size_t>(e)][minus] - sign * m.ext_mark(e)) < kRoundingTolerance;
  }
  rec("character degrees equal marks", dims);
  rec("chi_i(-1) = +d_i on I_2 and alpha_0, -d_i on I_1", parity);
  bool columns = true;
  const std::size_t r = group.num_classes();
  for (std::size_t c1 = 0; c1 < r; ++c1)
    for (std::size_t c2 = 0; c2 < r; ++c2) {
      std::complex<double> s = 0;
      for (const auto& row : table.values) s += row[c1] * std::conj(row[c2]);
      const double want = c1 == c2 ? static_cast<double>(group.order()) / static_cast<double>(group.classes()[c1].size()) : 0.0;
      columns = columns && std::abs(s - want) < kRoundingTolerance;
    }
  rec("character table column orthogonality", columns);
}

void check_oracles(const BranchingModel& m, const McKayGraph& graph, const FiniteGroup* group,
                   const CharacterTable* table, const VerifyOptions& opts, Recorder& rec) {
  const MultiplicityTable cox = serial::coxeter_table(m, opts.series_order);
  const MultiplicityTable rec_t = recursion_table(graph, opts.series_order);
  rec("coxeter series = McKay recursion (n <= " + str(opts.series_order) + ")", cox == rec_t);
  rec("sum rule sum_i d_i m_{n,i} = n + 1", serial::first_sum_rule_violation(cox, graph.marks()) < 0);
  bool parity = true;
  for (int n = 0; n <= opts.series_order; ++n)
    for (int e = 0; e < m.num_ext_nodes(); ++e)
      if (n % 2 != m.ext_part(e) % 2) parity = parity && cox.at(n, e) == 0;
  rec("m_{n,i} = 0 on parity mismatch", parity);
  if (group && table) {
    const int order = std::min(opts.character_order, opts.series_order);
    const MultiplicityTable chars = serial::character_table_multiplicities(*group, *table, order);
    bool equal = true, molien = true;
    for (int n = 0; n <= order; ++n) {
      for (int e = 0; e < m.num_ext_nodes(); ++e) equal = equal && chars.at(n, e) == cox.at(n, e);
      molien = molien && molien_coefficient(*group, n) == cox.at(n, 0);
    }
    rec("coxeter series = characters (n <= " + str(order) + ")", equal);
    rec("m(t)_0 = Molien average (n <= " + str(order) + ")", molien);
  }
}

}  // namespace

TypeReport verify_type(const DiagramType& dtype, const VerifyOptions& opts) {
  TypeReport report{dtype.to_string(), {}};
  Recorder rec(report.checks);
  try {
    const BranchingModel model(dtype);
    check_roots(model, rec);
    check_bipartition(model, rec);
    check_orbits(model, rec);
    for (auto& c : longest_element_checks(model.roots(), model.coxeter(), model.parts())) report.checks.push_back(c);
    check_heisenberg(model, rec);
    if (dtype == DiagramType(Family::E, 8)) check_golden(model, rec);

    const McKayGraph graph = extended_graph(model.roots());
    const FiniteGroup group = build_group(dtype);
    const CharacterTable table = character_table(group, graph);
    check_params(model, &group, rec);
    check_group(model, group, table, rec);
    check_oracles(model, graph, &group, &table, opts, rec);
  } catch (const std::exception& e) {
    rec("pipeline completed", false, e.what());
  }
  return report;
}

std::vector<TypeReport> verify_types(const std::vector<DiagramType>& types, const VerifyOptions& opts, bool parallel) {
  std::vector<TypeReport> reports(types.size());
  const auto n = static_cast<long>(types.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < n; ++k) reports[static_cast<std::size_t>(k)] = verify_type(types[static_cast<std::size_t>(k)], opts);
  return reports;
}

std::string render_report(const std::vector<TypeReport>& reports) {
  std::ostringstream os;
  std::size_t failed = 0, total = 0;
  for (const auto& r : reports) {
    os << "== " << r.type << " ==\n";
    for (const auto& c : r.checks) {
      ++total;
      if (!c.passed) ++failed;
      os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
      if (!c.passed && !c.detail.empty()) os << "  -- " << c.detail;
      os << '\n';
    }
  }
  os << (failed == 0 ? "PASS" : "FAIL") << ": " << (total - failed) << '/' << total << " checks passed across "
     << reports.size() << " type(s)\n";
  return os.str();
}

}  // namespace su2b
