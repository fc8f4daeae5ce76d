#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "su2branch/branching.hpp"
#include "su2branch/mckay.hpp"

using namespace su2b;

TEST_CASE("extended graphs") {
  const McKayGraph a3 = extended_graph(RootSystem(DiagramType(Family::A, 3)));
  REQUIRE(a3.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(a3.neighbors(i).size() == 2);
  CHECK(a3.marks() == std::vector<int>{1, 1, 1, 1});
  CHECK(a3.marks_in_kernel());

  const McKayGraph e8 = extended_graph(RootSystem(DiagramType(Family::E, 8)));
  CHECK(std::accumulate(e8.marks().begin(), e8.marks().end(), 0) == 30);

  for (const auto& t : table_types()) {
    CAPTURE(t.to_string());
    const RootSystem rs(t);
    const McKayGraph g = extended_graph(rs);
    CHECK(g.marks_in_kernel());
    for (int i = 0; i < g.size(); ++i) {
      CHECK(g.adjacency(i, i) == 0);
      long long s = 0;
      for (int j = 0; j < g.size(); ++j) {
        CHECK(g.adjacency(i, j) == g.adjacency(j, i));
        s += static_cast<long long>(g.adjacency(i, j)) * g.marks()[static_cast<std::size_t>(j)];
      }
      CHECK(s == 2 * g.marks()[static_cast<std::size_t>(i)]);
    }
    if (t.family() != Family::A) CHECK(g.neighbors(0).size() == 1);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) CHECK(g.adjacency(i + 1, j + 1) == (rs.adjacent(i, j) ? 1 : 0));
  }
}

TEST_CASE("recursion oracle") {
  const RootSystem e8(DiagramType(Family::E, 8));
  const McKayGraph g = extended_graph(e8);
  const auto vs = recursion_oracle(g, 200);
  REQUIRE(vs.size() == 201);
  CHECK(vs[0].entries == std::vector<Coeff>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  for (int e = 0; e < g.size(); ++e) CHECK(vs[1].entries[static_cast<std::size_t>(e)] == g.adjacency(0, e));

  const auto z0 = IntPolynomial{1} + IntPolynomial::monomial(30);
  const auto m0 = series_div_geom(z0, 12, 20, 200);
  for (int n = 0; n <= 200; ++n) {
    CHECK(vs[static_cast<std::size_t>(n)].level == n);
    CHECK(vs[static_cast<std::size_t>(n)].entries[0] == m0[n]);
    Coeff dim = 0;
    for (int e = 0; e < g.size(); ++e) dim += g.marks()[static_cast<std::size_t>(e)] * vs[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(e)];
    CHECK(dim == n + 1);
  }

  const auto a3 = recursion_oracle(extended_graph(RootSystem(DiagramType(Family::A, 3))), 2);
  // On the 4-cycle: A(e1 + e3) - e0 = e0 + 2 e2.
  CHECK(a3[2].entries == std::vector<Coeff>{1, 0, 2, 0});
  CHECK_THROWS_AS(recursion_oracle(g, -1), std::invalid_argument);
}

TEST_CASE("recursion matches the coxeter series for every type") {
  for (const auto& t : table_types()) {
    CAPTURE(t.to_string());
    const BranchingModel m(t);
    const auto vs = recursion_oracle(extended_graph(m.roots()), 200);
    for (int e = 0; e < m.num_ext_nodes(); ++e) {
      const auto s = m.series(e, 200);
      for (int n = 0; n <= 200; ++n) CHECK(vs[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(e)] == s[n]);
    }
    // Parity vanishing with k_0 = 2.
    for (int n = 0; n <= 200; ++n)
      for (int e = 0; e < m.num_ext_nodes(); ++e)
        if (n % 2 != m.ext_part(e) % 2) CHECK(vs[static_cast<std::size_t>(n)].entries[static_cast<std::size_t>(e)] == 0);
  }
}

TEST_CASE("affine A of even rank (odd cyclic groups) is constructible") {
  const McKayGraph a2 = affine_a_graph(2);
  CHECK(a2.marks_in_kernel());
  const auto vs = recursion_oracle(a2, 60);
  for (const auto& v : vs) CHECK(v.entries[0] + v.entries[1] + v.entries[2] == v.level + 1);
  const McKayGraph a1 = affine_a_graph(1);
  CHECK(a1.adjacency(0, 1) == 2);
  CHECK(a1.marks_in_kernel());
}

TEST_CASE("recursion on a non-affine graph goes negative") {
  // Finite A2 path with the end node playing alpha_0.
  const McKayGraph path(std::vector<int>{0, 1, 1, 0}, std::vector<int>{1, 1});
  CHECK_FALSE(path.marks_in_kernel());
  CHECK_THROWS_AS(recursion_oracle(path, 5), std::logic_error);
  CHECK_THROWS_AS(McKayGraph(std::vector<int>{0, 1, 2, 0}, std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(McKayGraph(std::vector<int>{0, 1, 1, 0}, std::vector<int>{2, 1}), std::invalid_argument);
}
