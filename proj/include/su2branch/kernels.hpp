#pragma once

// Bulk multiplicity kernels. Each has a serial reference and an OpenMP
// version; both must produce identical tables.

#include <cstddef>
#include <vector>

#include "su2branch/binarygroups.hpp"
#include "su2branch/branching.hpp"
#include "su2branch/mckay.hpp"
#include "su2branch/series.hpp"

namespace su2b {

/// m_{n,e} for n = 0..max_level (rows) and every extended node e (columns).
class MultiplicityTable {
public:
  MultiplicityTable(int max_level, int num_nodes)
      : max_level_(max_level), num_nodes_(num_nodes),
        data_(static_cast<std::size_t>(max_level + 1) * static_cast<std::size_t>(num_nodes), 0) {}

  int max_level() const { return max_level_; }
  int num_nodes() const { return num_nodes_; }
  Coeff& at(int n, int e) { return data_[index(n, e)]; }
  Coeff at(int n, int e) const { return data_[index(n, e)]; }

  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;

private:
  std::size_t index(int n, int e) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(num_nodes_) + static_cast<std::size_t>(e);
  }
  int max_level_;
  int num_nodes_;
  std::vector<Coeff> data_;
};

/// Table from the McKay recursion (inherently sequential in n).
MultiplicityTable recursion_table(const McKayGraph& graph, int max_level);

namespace serial {
MultiplicityTable coxeter_table(const BranchingModel& model, int max_level);
MultiplicityTable character_table_multiplicities(const FiniteGroup& group, const CharacterTable& table, int max_level);
/// First level n <= max_level where sum_e d_e m_{n,e} != n + 1, or -1.
int first_sum_rule_violation(const MultiplicityTable& t, const std::vector<int>& marks_ext);
}  // namespace serial

namespace omp {
MultiplicityTable coxeter_table(const BranchingModel& model, int max_level);
MultiplicityTable character_table_multiplicities(const FiniteGroup& group, const CharacterTable& table, int max_level);
int first_sum_rule_violation(const MultiplicityTable& t, const std::vector<int>& marks_ext);
}  // namespace omp

}  // namespace su2b
