#include "su2branch/mckay.hpp"

#include <stdexcept>
#include <string>

namespace su2b {

McKayGraph::McKayGraph(std::vector<int> adj, std::vector<int> marks_ext)
    : size_(static_cast<int>(marks_ext.size())), adjacency_(std::move(adj)), marks_(std::move(marks_ext)) {
  if (adjacency_.size() != static_cast<std::size_t>(size_ * size_))
    throw std::invalid_argument("McKay adjacency must be square over the extended nodes");
  if (size_ == 0 || marks_[0] != 1) throw std::invalid_argument("affine node must carry mark 1");
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      if (adjacency(i, j) != adjacency(j, i)) throw std::invalid_argument("McKay adjacency not symmetric");
      if (adjacency(i, j) < 0) throw std::invalid_argument("McKay adjacency has a negative entry");
    }
}

bool McKayGraph::marks_in_kernel() const {
  for (int i = 0; i < size_; ++i) {
    long long s = 0;
    for (int j = 0; j < size_; ++j) s += static_cast<long long>(cartan(i, j)) * marks_[static_cast<std::size_t>(j)];
    if (s != 0) return false;
  }
  return true;
}

std::vector<int> McKayGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size_; ++j)
    if (adjacency(i, j) != 0) out.push_back(j);
  return out;
}

McKayGraph extended_graph(const RootSystem& rs) {
  const int l = rs.rank();
  const int n = l + 1;
  std::vector<int> adj(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return adj[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rs.adjacent(i, j)) at(i + 1, j + 1) = -rs.cartan(i, j);
  // alpha_0 = -psi, so A_{0,i} = -(alpha_0, alpha_i) = (psi, alpha_i).
  for (int i = 0; i < l; ++i) {
    const int p = rs.inner_product(rs.highest_root(), Root::simple(static_cast<std::size_t>(l), i));
    if (p < 0) throw std::logic_error("highest root pairs negatively with a simple root");
    at(0, i + 1) = p;
    at(i + 1, 0) = p;
  }
  std::vector<int> marks{1};
  for (int d : rs.marks()) marks.push_back(d);
  McKayGraph graph(std::move(adj), std::move(marks));
  if (!graph.marks_in_kernel()) throw std::logic_error("marks are not in the kernel of the extended Cartan matrix");
  return graph;
}

McKayGraph affine_a_graph(int rank) {
  if (rank < 1) throw std::invalid_argument("affine A requires rank >= 1");
  const int n = rank + 1;
  std::vector<int> adj(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i * n + (i + 1) % n)] += 1;
  for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(((i + 1) % n) * n + i)] += 1;
  return McKayGraph(std::move(adj), std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::vector<MultiplicityVector> recursion_oracle(const McKayGraph& graph, int max_level) {
  if (max_level < 0) throw std::invalid_argument("recursion_oracle: negative level");
  const int n = graph.size();
  std::vector<MultiplicityVector> out;
  out.reserve(static_cast<std::size_t>(max_level) + 1);

  auto validate = [&](const MultiplicityVector& v) {
    for (int i = 0; i < n; ++i)
      if (v.entries[static_cast<std::size_t>(i)] < 0)
        throw std::logic_error("recursion oracle: negative multiplicity at level " + std::to_string(v.level) +
                               ", node " + std::to_string(i));
  };

  MultiplicityVector v0{0, std::vector<Coeff>(static_cast<std::size_t>(n), 0)};
  v0.entries[0] = 1;
  validate(v0);
  out.push_back(std::move(v0));

  for (int level = 1; level <= max_level; ++level) {
    const auto& cur = out.back().entries;
    MultiplicityVector next{level, std::vector<Coeff>(static_cast<std::size_t>(n), 0)};
    for (int i = 0; i < n; ++i) {
      Coeff acc = 0;
      for (int j = 0; j < n; ++j) {
        const int a = graph.adjacency(i, j);
        if (a != 0) acc = checked_add(acc, checked_mul(a, cur[static_cast<std::size_t>(j)]));
      }
      if (level >= 2) acc = checked_sub(acc, out[static_cast<std::size_t>(level - 2)].entries[static_cast<std::size_t>(i)]);
      next.entries[static_cast<std::size_t>(i)] = acc;
    }
    validate(next);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace su2b
