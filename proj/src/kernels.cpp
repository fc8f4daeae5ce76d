#include "su2branch/kernels.hpp"

#include <algorithm>
#include <complex>
#include <exception>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace su2b {

MultiplicityTable recursion_table(const McKayGraph& graph, int max_level) {
  const auto vs = recursion_oracle(graph, max_level);
  MultiplicityTable t(max_level, graph.size());
  for (int n = 0; n <= max_level; ++n)
    for (int e = 0; e < graph.size(); ++e) t.at(n, e) = vs[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(e)];
  return t;
}

namespace {

// chi_n at each class representative, rows n = 0..max_level. The recurrence
// is sequential in n, so this stays serial in both variants.
std::vector<std::vector<double>> su2_class_characters(const FiniteGroup& group, int max_level) {
  const std::size_t r = group.num_classes();
  std::vector<std::vector<double>> chi(static_cast<std::size_t>(max_level) + 1, std::vector<double>(r));
  for (std::size_t c = 0; c < r; ++c) {
    const double tr = group.elements()[group.classes()[c].front()].trace();
    double prev = 1, cur = tr;
    chi[0][c] = 1;
    for (int n = 1; n <= max_level; ++n) {
      chi[static_cast<std::size_t>(n)][c] = cur;
      const double next = tr * cur - prev;
      prev = cur;
      cur = next;
    }
  }
  return chi;
}

Coeff character_entry(const FiniteGroup& group, const CharacterTable& table, const std::vector<double>& chi_n, int e) {
  std::complex<double> s = 0;
  const auto& row = table.values[static_cast<std::size_t>(e)];
  for (std::size_t c = 0; c < chi_n.size(); ++c)
    s += static_cast<double>(group.classes()[c].size()) * chi_n[c] * std::conj(row[c]);
  return round_checked(s / static_cast<double>(group.order()), "character multiplicity");
}

bool sum_rule_holds(const MultiplicityTable& t, const std::vector<int>& marks_ext, int n) {
  try {
    Coeff dim = 0;
    for (int e = 0; e < t.num_nodes(); ++e)
      dim = checked_add(dim, checked_mul(marks_ext[static_cast<std::size_t>(e)], t.at(n, e)));
    return dim == n + 1;
  } catch (const std::overflow_error&) {
    return false;
  }
}

}  // namespace

namespace serial {

MultiplicityTable coxeter_table(const BranchingModel& model, int max_level) {
  MultiplicityTable t(max_level, model.num_ext_nodes());
  for (int e = 0; e < model.num_ext_nodes(); ++e) {
    const TruncatedSeries s = model.series(e, max_level);
    for (int n = 0; n <= max_level; ++n) t.at(n, e) = s[n];
  }
  return t;
}

MultiplicityTable character_table_multiplicities(const FiniteGroup& group, const CharacterTable& table, int max_level) {
  const auto chi = su2_class_characters(group, max_level);
  const int nodes = static_cast<int>(table.values.size());
  MultiplicityTable t(max_level, nodes);
  for (int n = 0; n <= max_level; ++n)
    for (int e = 0; e < nodes; ++e) t.at(n, e) = character_entry(group, table, chi[static_cast<std::size_t>(n)], e);
  return t;
}

int first_sum_rule_violation(const MultiplicityTable& t, const std::vector<int>& marks_ext) {
  for (int n = 0; n <= t.max_level(); ++n)
    if (!sum_rule_holds(t, marks_ext, n)) return n;
  return -1;
}

}  // namespace serial

namespace omp {

MultiplicityTable coxeter_table(const BranchingModel& model, int max_level) {
  const int nodes = model.num_ext_nodes();
  MultiplicityTable t(max_level, nodes);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nodes));
#pragma omp parallel for schedule(dynamic)
  for (int e = 0; e < nodes; ++e) {
    try {
      const TruncatedSeries s = model.series(e, max_level);
      for (int n = 0; n <= max_level; ++n) t.at(n, e) = s[n];
    } catch (...) {
      errors[static_cast<std::size_t>(e)] = std::current_exception();
    }
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return t;
}

MultiplicityTable character_table_multiplicities(const FiniteGroup& group, const CharacterTable& table, int max_level) {
  const auto chi = su2_class_characters(group, max_level);
  const int nodes = static_cast<int>(table.values.size());
  MultiplicityTable t(max_level, nodes);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(max_level) + 1);
#pragma omp parallel for schedule(static)
  for (int n = 0; n <= max_level; ++n) {
    try {
      for (int e = 0; e < nodes; ++e) t.at(n, e) = character_entry(group, table, chi[static_cast<std::size_t>(n)], e);
    } catch (...) {
      errors[static_cast<std::size_t>(n)] = std::current_exception();
    }
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return t;
}

int first_sum_rule_violation(const MultiplicityTable& t, const std::vector<int>& marks_ext) {
  int first = std::numeric_limits<int>::max();
#pragma omp parallel for reduction(min : first)
  for (int n = 0; n <= t.max_level(); ++n)
    if (!sum_rule_holds(t, marks_ext, n)) first = std::min(first, n);
  return first == std::numeric_limits<int>::max() ? -1 : first;
}

}  // namespace omp

}  // namespace su2b
