#include "su2branch/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace su2b {

DiagramType::DiagramType(Family family, int rank) : family_(family), rank_(rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A_l requires l >= 1");
      if (rank % 2 == 0)
        throw std::invalid_argument("A" + std::to_string(rank) +
                                    " has even rank: odd-order cyclic groups are not supported");
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D_l requires l >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_l requires l in {6, 7, 8}");
      break;
  }
}

DiagramType DiagramType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad diagram type '" + std::string(text) + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw std::invalid_argument("unknown diagram family in '" + std::string(text) + "'");
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad rank in '" + std::string(text) + "'");
  return DiagramType(family, rank);
}

std::string DiagramType::to_string() const {
  const char letter = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return letter + std::to_string(rank_);
}

std::vector<DiagramType> table_types() {
  std::vector<DiagramType> out;
  for (int l = 3; l <= 13; l += 2) out.emplace_back(Family::A, l);
  for (int l = 4; l <= 12; ++l) out.emplace_back(Family::D, l);
  for (int l = 6; l <= 8; ++l) out.emplace_back(Family::E, l);
  return out;
}

int Root::height() const {
  int s = 0;
  for (int c : coeffs) s += c;
  return s;
}

bool Root::is_positive() const {
  return std::ranges::all_of(coeffs, [](int c) { return c >= 0; }) && height() > 0;
}

bool Root::is_negative() const {
  return std::ranges::all_of(coeffs, [](int c) { return c <= 0; }) && height() < 0;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& x, const Root& y) {
  Root r = x;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs.at(i);
  return r;
}

Root operator-(const Root& x, const Root& y) { return x + (-y); }

Root operator*(int k, const Root& x) {
  Root r = x;
  for (int& c : r.coeffs) c *= k;
  return r;
}

Root Root::simple(std::size_t rank, int i) {
  Root r{std::vector<int>(rank, 0)};
  r.coeffs.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ')';
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(const DiagramType& t) {
  const int l = t.rank();
  std::vector<std::pair<int, int>> e;
  switch (t.family()) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 <= l - 3; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(l - 3, l - 2);
      e.emplace_back(l - 3, l - 1);
      break;
    case Family::E:
      for (int i = 0; i + 1 <= l - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, l - 1);
      break;
  }
  return e;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("root system invariant violated: " + what);
}

}  // namespace

RootSystem::RootSystem(DiagramType dtype) : dtype_(dtype) {
  const int l = rank();
  const auto ul = static_cast<std::size_t>(l);
  cartan_.assign(ul * ul, 0);
  neighbors_.assign(ul, {});
  for (int i = 0; i < l; ++i) cartan_[static_cast<std::size_t>(i * l + i)] = 2;
  for (auto [i, j] : diagram_edges(dtype)) {
    cartan_[static_cast<std::size_t>(i * l + j)] = -1;
    cartan_[static_cast<std::size_t>(j * l + i)] = -1;
    neighbors_[static_cast<std::size_t>(i)].push_back(j);
    neighbors_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& n : neighbors_) std::ranges::sort(n);

  // Breadth-first closure: for a positive root r != alpha_j in a simply-laced
  // system, r + alpha_j is a root iff (r, alpha_j) = -1.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < l; ++i) {
    Root s = Root::simple(ul, i);
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      Root aj = Root::simple(ul, j);
      if (inner_product(r, aj) != -1) continue;
      Root next = r + aj;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  positive_.assign(seen.begin(), seen.end());
  std::ranges::sort(positive_, [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x < y;
  });
  roots_ = positive_;
  for (const Root& r : positive_) roots_.push_back(-r);
  lookup_.reserve(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) lookup_.emplace_back(roots_[k], k);
  std::ranges::sort(lookup_, {}, &std::pair<Root, std::size_t>::first);

  require(roots_.size() % ul == 0, "card(Delta) divisible by rank");
  coxeter_number_ = static_cast<int>(roots_.size() / ul);
  require(coxeter_number_ % 2 == 0, "Coxeter number even");
  require(positive_.size() == static_cast<std::size_t>(coxeter_number_ / 2 * l), "card(Delta_+) = g l");

  // The last root in height order must be the unique dominant one.
  const Root& psi = highest_root();
  for (int i = 0; i < l; ++i) {
    require(!index_of(psi + Root::simple(ul, i)).has_value(), "psi + alpha_i is not a root");
    require(psi.coeffs[static_cast<std::size_t>(i)] > 0, "marks positive");
  }
  for (std::size_t k = 0; k + 1 < positive_.size(); ++k)
    require(positive_[k].height() < psi.height(), "highest root unique");
  for (const Root& r : roots_) require(inner_product(r, r) == 2, "roots have squared length 2");
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = std::ranges::lower_bound(lookup_, r, {}, &std::pair<Root, std::size_t>::first);
  if (it == lookup_.end() || it->first != r) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::negate_index(std::size_t idx) const {
  const std::size_t np = positive_.size();
  return idx < np ? idx + np : idx - np;
}

std::size_t RootSystem::simple_index(int i) const { return *index_of(Root::simple(static_cast<std::size_t>(rank()), i)); }

int RootSystem::inner_product(const Root& x, const Root& y) const {
  const int l = rank();
  int s = 0;
  for (int i = 0; i < l; ++i) {
    const int xi = x.coeffs[static_cast<std::size_t>(i)];
    if (xi == 0) continue;
    for (int j = 0; j < l; ++j) s += xi * cartan(i, j) * y.coeffs[static_cast<std::size_t>(j)];
  }
  return s;
}

Root RootSystem::reflect(int i, const Root& x) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("reflect: node index out of range");
  const Root ai = Root::simple(static_cast<std::size_t>(rank()), i);
  return x - inner_product(x, ai) * ai;
}

int special_index(const RootSystem& rs) {
  if (rs.dtype().family() == Family::A) return (rs.rank() - 1) / 2;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.neighbors(i).size() == 3) return i;
  throw std::logic_error("no branch node in a D/E diagram");
}

int distance_to_affine(const RootSystem& rs, int i) {
  const auto l = static_cast<std::size_t>(rs.rank());
  std::vector<int> dist(l, -1);
  std::deque<int> queue;
  for (int j = 0; j < rs.rank(); ++j) {
    if (rs.inner_product(rs.highest_root(), Root::simple(l, j)) > 0) {
      dist[static_cast<std::size_t>(j)] = 1;
      queue.push_back(j);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : rs.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist.at(static_cast<std::size_t>(i));
}

}  // namespace su2b
