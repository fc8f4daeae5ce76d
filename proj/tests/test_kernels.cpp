#include <doctest.h>

#include <stdexcept>

#include <omp.h>

#include "su2branch/kernels.hpp"

using namespace su2b;

TEST_CASE("serial and OpenMP kernels agree") {
  omp_set_num_threads(4);
  for (const auto& t : table_types()) {
    CAPTURE(t.to_string());
    const BranchingModel m(t);
    const McKayGraph graph = extended_graph(m.roots());
    const auto cs = serial::coxeter_table(m, 400);
    const auto co = omp::coxeter_table(m, 400);
    CHECK(cs == co);
    CHECK(cs == recursion_table(graph, 400));
    CHECK(serial::first_sum_rule_violation(cs, graph.marks()) == -1);
    CHECK(omp::first_sum_rule_violation(co, graph.marks()) == -1);

    const FiniteGroup g = build_group(t);
    const CharacterTable table = character_table(g, graph);
    const auto ks = serial::character_table_multiplicities(g, table, 60);
    CHECK(ks == omp::character_table_multiplicities(g, table, 60));
    for (int n = 0; n <= 60; ++n)
      for (int e = 0; e < m.num_ext_nodes(); ++e) CHECK(ks.at(n, e) == cs.at(n, e));
  }
}

TEST_CASE("sum-rule scan finds the first bad level") {
  const BranchingModel m(DiagramType(Family::D, 6));
  auto t = serial::coxeter_table(m, 50);
  const auto marks = extended_graph(m.roots()).marks();
  t.at(37, 2) += 1;
  t.at(44, 0) += 1;
  CHECK(serial::first_sum_rule_violation(t, marks) == 37);
  CHECK(omp::first_sum_rule_violation(t, marks) == 37);
}

TEST_CASE("character kernel surfaces rounding failures") {
  const DiagramType e6(Family::E, 6);
  const FiniteGroup g = build_group(e6);
  CharacterTable table = character_table(g, extended_graph(RootSystem(e6)));
  table.values[1][1] += 0.37;
  CHECK_THROWS_AS(serial::character_table_multiplicities(g, table, 10), std::logic_error);
  CHECK_THROWS_AS(omp::character_table_multiplicities(g, table, 10), std::logic_error);
}
