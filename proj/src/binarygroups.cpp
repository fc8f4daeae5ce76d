#include "su2branch/binarygroups.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace su2b {

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

std::array<std::complex<double>, 4> Quaternion::matrix() const {
  using C = std::complex<double>;
  return {C{w, x}, C{y, z}, C{-y, z}, C{w, -x}};
}

bool Quaternion::near(const Quaternion& o, double eps) const {
  return std::abs(w - o.w) < eps && std::abs(x - o.x) < eps && std::abs(y - o.y) < eps && std::abs(z - o.z) < eps;
}

std::size_t FiniteGroup::find(const GroupElement& q) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].near(q)) return i;
  return elements_.size();
}

FiniteGroup::FiniteGroup(DiagramType dtype, std::vector<GroupElement> elements)
    : dtype_(dtype), elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0 || !elements_[0].near(Quaternion{})) throw std::invalid_argument("group must list the identity first");
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = find(elements_[i] * elements_[j]);
      if (k == n) throw std::logic_error("group not closed under multiplication");
      table_[i * n + j] = static_cast<std::uint16_t>(k);
      if (k == 0) inverse_[i] = j;
    }
  }
  minus_identity_ = find(-Quaternion{});
  if (minus_identity_ == n) throw std::logic_error("-1 missing from a binary polyhedral group");
  classes_ = conjugacy_classes(*this);
  class_of_.resize(n);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (std::size_t e : classes_[c]) class_of_[e] = c;
}

std::size_t nominal_group_order(const DiagramType& dtype) {
  const auto l = static_cast<std::size_t>(dtype.rank());
  switch (dtype.family()) {
    case Family::A: return l + 1;        // Z_n with l = 2n - 1
    case Family::D: return 4 * (l - 2);  // Delta_n with l = n + 2
    case Family::E: return l == 6 ? 24 : l == 7 ? 48 : 120;
  }
  return 0;
}

namespace {

std::vector<Quaternion> generators(const DiagramType& dtype) {
  const double pi = std::numbers::pi;
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, omega{0.5, 0.5, 0.5, 0.5};
  switch (dtype.family()) {
    case Family::A: {
      const int n = (dtype.rank() + 1) / 2;
      return {{std::cos(pi / n), std::sin(pi / n), 0, 0}};
    }
    case Family::D: {
      const int n = dtype.rank() - 2;
      return {{std::cos(pi / n), std::sin(pi / n), 0, 0}, j};
    }
    case Family::E:
      break;
  }
  if (dtype.rank() == 6) return {i, j, omega};
  if (dtype.rank() == 7) return {i, j, omega, {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0, 0}};
  const double phi = std::numbers::phi;
  return {i, omega, {phi / 2, 1 / (2 * phi), 0.5, 0}};
}

}  // namespace

FiniteGroup build_group(const DiagramType& dtype) {
  const std::size_t expected = nominal_group_order(dtype);
  const auto gens = generators(dtype);
  std::vector<Quaternion> elems{Quaternion{}};
  std::deque<std::size_t> queue{0};
  auto contains = [&](const Quaternion& q) {
    return std::ranges::any_of(elems, [&](const Quaternion& e) { return e.near(q); });
  };
  while (!queue.empty()) {
    const Quaternion cur = elems[queue.front()];
    queue.pop_front();
    for (const Quaternion& gen : gens) {
      const Quaternion next = cur * gen;
      if (std::abs(next.norm2() - 1) > kDedupTolerance) throw std::logic_error("closure drifted off the unit sphere");
      if (contains(next)) continue;
      elems.push_back(next);
      if (elems.size() > expected)
        throw std::logic_error("closure of " + dtype.to_string() + " exceeds nominal order " +
                               std::to_string(expected));
      queue.push_back(elems.size() - 1);
    }
  }
  if (elems.size() != expected)
    throw std::logic_error("closure of " + dtype.to_string() + " has order " + std::to_string(elems.size()) +
                           ", expected " + std::to_string(expected));
  FiniteGroup group(dtype, std::move(elems));
  if (group.num_classes() != static_cast<std::size_t>(dtype.rank() + 1))
    throw std::logic_error("class count of " + dtype.to_string() + " is " + std::to_string(group.num_classes()) +
                           ", expected rank + 1");
  return group;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t c = group.multiply(group.multiply(g, x), group.inverse(g));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::ranges::sort(cls);
    classes.push_back(std::move(cls));
  }
  return classes;
}

double su2_character(const GroupElement& g, int n) {
  if (n < 0) throw std::invalid_argument("su2_character: negative n");
  const double tr = g.trace();
  double prev = 1, cur = tr;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = tr * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> class_inner_product(const FiniteGroup& group, const std::vector<std::complex<double>>& f,
                                         const std::vector<std::complex<double>>& g) {
  std::complex<double> s = 0;
  for (std::size_t c = 0; c < group.num_classes(); ++c)
    s += static_cast<double>(group.classes()[c].size()) * f[c] * std::conj(g[c]);
  return s / static_cast<double>(group.order());
}

Coeff round_checked(std::complex<double> v, const char* what) {
  const double r = std::round(v.real());
  if (std::abs(v.real() - r) >= kRoundingTolerance || std::abs(v.imag()) >= kRoundingTolerance)
    throw std::logic_error(std::string(what) + ": value " + std::to_string(v.real()) + "+" +
                           std::to_string(v.imag()) + "i is not an integer within tolerance");
  return static_cast<Coeff>(r);
}

namespace {

using Row = std::vector<std::complex<double>>;

// Raw irreducible characters, one per row, indexed by class.
std::vector<Row> dixon_characters(const FiniteGroup& group) {
  const std::size_t r = group.num_classes();
  const auto& classes = group.classes();

  // Class constants a[r][s][t] = #{x in C_r : x^{-1} z_t in C_s}.
  std::vector<Eigen::MatrixXd> consts(r, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)));
  for (std::size_t t = 0; t < r; ++t) {
    const std::size_t zt = classes[t].front();
    for (std::size_t cr = 0; cr < r; ++cr)
      for (std::size_t x : classes[cr]) {
        const std::size_t s = group.class_of(group.multiply(group.inverse(x), zt));
        consts[cr](static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) += 1;
      }
  }

  std::mt19937_64 rng(0x5eed'2b1a'0000'0001ULL);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t cr = 0; cr < r; ++cr) mix += coef(rng) * consts[cr].cast<std::complex<double>>();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(mix);
    if (solver.info() != Eigen::Success) continue;
    const auto& lambda = solver.eigenvalues();
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index p = 0; p < lambda.size(); ++p)
      for (Eigen::Index q = p + 1; q < lambda.size(); ++q) gap = std::min(gap, std::abs(lambda(p) - lambda(q)));
    if (gap < 1e-6) continue;

    std::vector<Row> rows;
    for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(r); ++col) {
      Eigen::VectorXcd w = solver.eigenvectors().col(col);
      w /= w(0);  // central character of the identity class is 1
      double norm = 0;
      for (std::size_t t = 0; t < r; ++t) norm += std::norm(w(static_cast<Eigen::Index>(t))) / static_cast<double>(classes[t].size());
      const double dim = std::sqrt(static_cast<double>(group.order()) / norm);
      Row row(r);
      for (std::size_t t = 0; t < r; ++t)
        row[t] = dim * w(static_cast<Eigen::Index>(t)) / static_cast<double>(classes[t].size());
      rows.push_back(std::move(row));
    }
    return rows;
  }
  throw std::logic_error("character table: could not separate class-sum eigenvalues");
}

long long key(double v) { return std::llround(v * 1e7); }

bool canonical_less(const Row& x, const Row& y) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (key(x[c].real()) != key(y[c].real())) return key(x[c].real()) < key(y[c].real());
    if (key(x[c].imag()) != key(y[c].imag())) return key(x[c].imag()) < key(y[c].imag());
  }
  return false;
}

struct Matcher {
  const McKayGraph& graph;
  const std::vector<std::vector<int>>& tensor;  // by canonical row
  const std::vector<int>& dims;
  std::vector<int> row_of_node;
  std::vector<bool> used;

  bool extend(int node) {
    const int n = graph.size();
    if (node == n) return true;
    for (int row = 0; row < n; ++row) {
      if (used[static_cast<std::size_t>(row)] || dims[static_cast<std::size_t>(row)] != graph.marks()[static_cast<std::size_t>(node)])
        continue;
      bool ok = tensor[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)] == graph.adjacency(node, node);
      for (int prev = 0; prev < node && ok; ++prev) {
        const int prow = row_of_node[static_cast<std::size_t>(prev)];
        ok = tensor[static_cast<std::size_t>(row)][static_cast<std::size_t>(prow)] == graph.adjacency(node, prev);
      }
      if (!ok) continue;
      row_of_node[static_cast<std::size_t>(node)] = row;
      used[static_cast<std::size_t>(row)] = true;
      if (extend(node + 1)) return true;
      used[static_cast<std::size_t>(row)] = false;
    }
    return false;
  }
};

}  // namespace

CharacterTable character_table(const FiniteGroup& group, const McKayGraph& graph) {
  const std::size_t r = group.num_classes();
  if (static_cast<std::size_t>(graph.size()) != r) throw std::logic_error("character table: class count != graph size");

  std::vector<Row> rows = dixon_characters(group);
  std::ranges::sort(rows, canonical_less);

  std::vector<int> dims;
  for (const Row& row : rows) dims.push_back(static_cast<int>(round_checked(row[0], "character degree")));

  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q) {
      const auto ip = class_inner_product(group, rows[p], rows[q]);
      if (std::abs(ip - std::complex<double>(p == q ? 1.0 : 0.0)) >= kRoundingTolerance)
        throw std::logic_error("character table: rows not orthonormal");
    }

  // Tensor-with-gamma graph on the rows.
  Row gamma(r);
  for (std::size_t c = 0; c < r; ++c) gamma[c] = group.elements()[group.classes()[c].front()].trace();
  std::vector<std::vector<int>> tensor(r, std::vector<int>(r, 0));
  for (std::size_t p = 0; p < r; ++p) {
    Row prod(r);
    for (std::size_t c = 0; c < r; ++c) prod[c] = rows[p][c] * gamma[c];
    for (std::size_t q = 0; q < r; ++q)
      tensor[p][q] = static_cast<int>(round_checked(class_inner_product(group, prod, rows[q]), "tensor multiplicity"));
  }

  // The trivial row must land on node 0; the first matching row in canonical
  // order is taken for each node in extended-index order.
  Matcher m{graph, tensor, dims, std::vector<int>(r, -1), std::vector<bool>(r, false)};
  std::size_t trivial = r;
  for (std::size_t p = 0; p < r; ++p)
    if (std::ranges::all_of(rows[p], [](auto v) { return std::abs(v - 1.0) < kRoundingTolerance; })) trivial = p;
  if (trivial == r) throw std::logic_error("character table: no trivial character");
  m.row_of_node[0] = static_cast<int>(trivial);
  m.used[trivial] = true;
  if (dims[trivial] != graph.marks()[0] || tensor[trivial][trivial] != graph.adjacency(0, 0) || !m.extend(1))
    throw std::logic_error("character table: tensor graph does not match the extended diagram");

  CharacterTable table;
  table.node_map.assign(r, -1);
  for (std::size_t node = 0; node < r; ++node) {
    const auto row = static_cast<std::size_t>(m.row_of_node[node]);
    table.node_map[row] = static_cast<int>(node);
    table.values.push_back(rows[row]);
    table.dims.push_back(dims[row]);
  }
  return table;
}

Coeff oracle_multiplicity(const FiniteGroup& group, const CharacterTable& table, int n, int ext_index) {
  if (ext_index < 0 || static_cast<std::size_t>(ext_index) >= table.values.size())
    throw std::out_of_range("oracle_multiplicity: node index out of range");
  Row chi_n(group.num_classes());
  for (std::size_t c = 0; c < chi_n.size(); ++c) chi_n[c] = su2_character(group.elements()[group.classes()[c].front()], n);
  return round_checked(class_inner_product(group, chi_n, table.values[static_cast<std::size_t>(ext_index)]),
                       "character multiplicity");
}

Coeff molien_coefficient(const FiniteGroup& group, int n) {
  double s = 0;
  for (const auto& g : group.elements()) s += su2_character(g, n);
  return round_checked(s / static_cast<double>(group.order()), "Molien average");
}

}  // namespace su2b
