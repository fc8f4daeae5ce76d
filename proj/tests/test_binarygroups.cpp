#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "su2branch/binarygroups.hpp"
#include "su2branch/mckay.hpp"

using namespace su2b;

TEST_CASE("group orders and classes") {
  const FiniteGroup e8 = build_group(DiagramType(Family::E, 8));
  CHECK(e8.order() == 120);
  CHECK(e8.num_classes() == 9);
  const FiniteGroup e6 = build_group(DiagramType(Family::E, 6));
  CHECK(e6.order() == 24);
  CHECK(e6.num_classes() == 7);
  CHECK(build_group(DiagramType(Family::E, 7)).order() == 48);

  for (const auto& t : table_types()) {
    CAPTURE(t.to_string());
    const FiniteGroup g = build_group(t);
    CHECK(g.order() == nominal_group_order(t));
    CHECK(g.num_classes() == static_cast<std::size_t>(t.rank() + 1));
    CHECK(g.classes()[g.class_of(g.identity())].size() == 1);
    CHECK(g.classes()[g.class_of(g.minus_identity())].size() == 1);
    CHECK(g.multiply(g.minus_identity(), g.minus_identity()) == g.identity());
    std::size_t total = 0;
    for (const auto& c : g.classes()) total += c.size();
    CHECK(total == g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      CHECK(g.multiply(x, g.inverse(x)) == g.identity());
      CHECK(g.multiply(g.minus_identity(), x) == g.multiply(x, g.minus_identity()));
      CHECK(std::abs(g.elements()[x].norm2() - 1) < 1e-12);
    }
  }
}

TEST_CASE("property: associativity on random triples") {
  const FiniteGroup g = build_group(DiagramType(Family::E, 8));
  oracle::Lcg rng{11};
  const int n = static_cast<int>(g.order()) - 1;
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, n));
    const auto b = static_cast<std::size_t>(rng.uniform(0, n));
    const auto c = static_cast<std::size_t>(rng.uniform(0, n));
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }
}

TEST_CASE("quaternion matrices are special unitary") {
  const FiniteGroup g = build_group(DiagramType(Family::E, 7));
  for (const auto& q : g.elements()) {
    const auto m = q.matrix();
    CHECK(std::abs(m[0] * m[3] - m[1] * m[2] - 1.0) < 1e-12);
    CHECK(std::abs((m[0] + m[3]).real() - q.trace()) < 1e-12);
  }
}

TEST_CASE("su2 characters") {
  const Quaternion id{}, minus = -Quaternion{};
  for (int n = 0; n <= 20; ++n) {
    CHECK(su2_character(id, n) == doctest::Approx(n + 1));
    CHECK(su2_character(minus, n) == doctest::Approx((n % 2 ? -1 : 1) * (n + 1)));
  }
  const Quaternion q{0.3, 0.4, 0.5, std::sqrt(1 - 0.09 - 0.16 - 0.25)};
  CHECK(su2_character(q, 2) == doctest::Approx(q.trace() * q.trace() - 1));
  const double theta = std::acos(q.w);
  CHECK(su2_character(q, 7) == doctest::Approx(std::sin(8 * theta) / std::sin(theta)));
}

TEST_CASE("character tables") {
  for (const auto& t : table_types()) {
    CAPTURE(t.to_string());
    const FiniteGroup g = build_group(t);
    const McKayGraph graph = extended_graph(RootSystem(t));
    const CharacterTable table = character_table(g, graph);
    CHECK(table.dims == graph.marks());
    for (auto v : table.values[0]) CHECK(std::abs(v - 1.0) < 1e-9);
    for (std::size_t p = 0; p < table.values.size(); ++p)
      for (std::size_t q = 0; q < table.values.size(); ++q)
        CHECK(std::abs(class_inner_product(g, table.values[p], table.values[q]) - (p == q ? 1.0 : 0.0)) < 1e-6);
    std::vector<int> seen = table.node_map;
    std::ranges::sort(seen);
    for (int e = 0; e < graph.size(); ++e) CHECK(seen[static_cast<std::size_t>(e)] == e);
    // Defining character is the trace.
    CHECK(g.elements()[g.minus_identity()].trace() == doctest::Approx(-2));
  }
  const FiniteGroup e8 = build_group(DiagramType(Family::E, 8));
  const CharacterTable t8 = character_table(e8, extended_graph(RootSystem(DiagramType(Family::E, 8))));
  std::vector<int> dims = t8.dims;
  std::ranges::sort(dims);
  CHECK(dims == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("character oracle multiplicities") {
  const DiagramType e8t(Family::E, 8);
  const FiniteGroup g = build_group(e8t);
  const McKayGraph graph = extended_graph(RootSystem(e8t));
  const CharacterTable table = character_table(g, graph);
  const std::map<int, std::int64_t> z0{{0, 1}, {30, 1}};
  const auto vs = recursion_oracle(graph, 60);
  for (int n = 0; n <= 60; ++n) {
    CHECK(oracle_multiplicity(g, table, n, 0) == oracle::geometric_coefficient(z0, 12, 20, n));
    CHECK(molien_coefficient(g, n) == oracle::geometric_coefficient(z0, 12, 20, n));
    for (int e = 0; e < graph.size(); ++e)
      CHECK(oracle_multiplicity(g, table, n, e) == vs[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(e)]);
  }
  for (const auto& t : table_types()) {
    const FiniteGroup gt = build_group(t);
    const CharacterTable tt = character_table(gt, extended_graph(RootSystem(t)));
    CHECK(oracle_multiplicity(gt, tt, 0, 0) == 1);
  }
  CHECK_THROWS_AS(oracle_multiplicity(g, table, 3, 9), std::out_of_range);
  CHECK_THROWS_AS(round_checked({0.5, 0}, "test"), std::logic_error);
  CHECK_THROWS_AS(round_checked({1.0, 0.01}, "test"), std::logic_error);
  CHECK(round_checked({2.0000000001, 0}, "test") == 2);
}

TEST_CASE("central parity of irreducibles") {
  const DiagramType d6(Family::D, 6);
  const RootSystem rs(d6);
  const FiniteGroup g = build_group(d6);
  const CharacterTable table = character_table(g, extended_graph(rs));
  // Node 2 (simple index 1) pairs with psi, so it lies in part 1 and is faithful.
  const std::size_t minus = g.class_of(g.minus_identity());
  CHECK(table.values[2][minus].real() == doctest::Approx(-2));
  CHECK(table.values[0][minus].real() == doctest::Approx(1));
}

TEST_CASE("group construction rejects bad input") {
  CHECK_THROWS_AS(FiniteGroup(DiagramType(Family::A, 1), {Quaternion{0, 1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup(DiagramType(Family::A, 1), {Quaternion{}, Quaternion{0, 1, 0, 0}}), std::logic_error);
}
