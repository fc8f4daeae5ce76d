#pragma once

// Extended Coxeter-Dynkin graph and the Clebsch-Gordan recursion
// pi_n (x) pi_1 = pi_{n+1} (+) pi_{n-1}, read through the McKay adjacency.

#include <cstdint>
#include <vector>

#include "su2branch/rootsys.hpp"
#include "su2branch/series.hpp"

namespace su2b {

/// Index 0 is the affine node alpha_0; index i + 1 is simple root i.
class McKayGraph {
public:
  McKayGraph(std::vector<int> adjacency, std::vector<int> marks_ext);

  int size() const { return size_; }
  int adjacency(int i, int j) const { return adjacency_[static_cast<std::size_t>(i * size_ + j)]; }
  const std::vector<int>& adjacency() const { return adjacency_; }
  /// Extended Cartan entry 2 delta_ij - A_ij.
  int cartan(int i, int j) const { return (i == j ? 2 : 0) - adjacency(i, j); }
  const std::vector<int>& marks() const { return marks_; }
  std::vector<int> neighbors(int i) const;
  /// C marks = 0, i.e. marks is the eigenvalue-2 Perron vector of A.
  bool marks_in_kernel() const;

private:
  int size_;
  std::vector<int> adjacency_;
  std::vector<int> marks_;
};

McKayGraph extended_graph(const RootSystem& rs);

/// Affine A_l (an (l+1)-cycle) for any l >= 1, including even l, which has
/// no RootSystem here. All marks are 1.
McKayGraph affine_a_graph(int rank);

struct MultiplicityVector {
  int level = 0;
  std::vector<Coeff> entries;
};

/// v_0 = e_0, v_1 = A v_0, v_{n+1} = A v_n - v_{n-1}. Throws std::logic_error
/// on a negative entry, which only happens for graphs that are not extended
/// ADE diagrams.
std::vector<MultiplicityVector> recursion_oracle(const McKayGraph& graph, int max_level);

}  // namespace su2b
