#include <doctest.h>

#include <limits>
#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "su2branch/series.hpp"

using namespace su2b;

namespace {

IntPolynomial random_poly(oracle::Lcg& rng, int max_degree, int span) {
  std::vector<Coeff> c(static_cast<std::size_t>(rng.uniform(0, max_degree) + 1));
  for (auto& v : c) v = rng.uniform(-span, span);
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("polynomial basics") {
  const IntPolynomial one{1};
  CHECK(poly_add(one, IntPolynomial::monomial(30)) == IntPolynomial::from_terms(std::vector<std::pair<int, Coeff>>{{0, 1}, {30, 1}}));
  const IntPolynomial fa = IntPolynomial{1} - IntPolynomial::monomial(12);
  const IntPolynomial fb = IntPolynomial{1} - IntPolynomial::monomial(20);
  const IntPolynomial want = IntPolynomial::from_terms(std::vector<std::pair<int, Coeff>>{{0, 1}, {12, -1}, {20, -1}, {32, 1}});
  CHECK(poly_mul(fa, fb) == want);
  CHECK(poly_mul(fa, IntPolynomial{}).is_zero());
  CHECK(IntPolynomial{0, 0, 0}.degree() == -1);
  CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
  CHECK(eval_at_one(poly_add(one, IntPolynomial::monomial(30))) == 2);
}

TEST_CASE("rendering") {
  const auto p = IntPolynomial::from_terms(std::vector<std::pair<int, Coeff>>{{1, 1}, {11, 1}, {15, 2}});
  CHECK(p.to_string() == "t + t^11 + 2t^15");
  CHECK(p.to_sparse_string() == "1:1 11:1 15:2");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{3, -1}.to_string() == "3 - t");
}

TEST_CASE("series_div_geom examples") {
  SUBCASE("1 / (1-t)^2") {
    const auto s = series_div_geom(IntPolynomial{1}, 1, 1, 3);
    CHECK(s.coeffs() == std::vector<Coeff>{1, 2, 3, 4});
  }
  SUBCASE("E8 invariants through t^24") {
    const auto z = IntPolynomial{1} + IntPolynomial::monomial(30);
    const auto s = series_div_geom(z, 12, 20, 24);
    for (int n = 0; n <= 24; ++n) {
      const bool hit = n == 0 || n == 12 || n == 20 || n == 24;
      CHECK(s[n] == (hit ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(series_div_geom(IntPolynomial{1}, 0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(series_div_geom(IntPolynomial{1}, 2, 2, -1), std::invalid_argument);
}

TEST_CASE("series_div_geom agrees with pair counting") {
  oracle::Lcg rng{42};
  for (int trial = 0; trial < 50; ++trial) {
    const int a = 2 * rng.uniform(1, 6), b = 2 * rng.uniform(1, 10);
    std::map<int, std::int64_t> terms;
    std::vector<std::pair<int, Coeff>> list;
    for (int k = 0; k < 6; ++k) {
      const int e = rng.uniform(0, 30), c = rng.uniform(0, 3);
      terms[e] += c;
      list.emplace_back(e, c);
    }
    const auto s = series_div_geom(IntPolynomial::from_terms(list), a, b, 120);
    for (int n = 0; n <= 120; ++n) REQUIRE(s[n] == oracle::geometric_coefficient(terms, a, b, n));
  }
}

TEST_CASE("property: ring axioms on random polynomials") {
  oracle::Lcg rng{7};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 8, 5), q = random_poly(rng, 8, 5), r = random_poly(rng, 8, 5);
    CHECK(p * (q * r) == (p * q) * r);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p + q) - q == p);
    CHECK(eval_at_one(p * q) == eval_at_one(p) * eval_at_one(q));
  }
}

TEST_CASE("property: division round-trip on 100 random polynomials") {
  oracle::Lcg rng{2024};
  for (int trial = 0; trial < 100; ++trial) {
    const int order = rng.uniform(0, 80);
    const auto z = random_poly(rng, order, 9);
    const int a = rng.uniform(1, 12), b = rng.uniform(1, 20);
    const auto denom = (IntPolynomial{1} - IntPolynomial::monomial(a)) * (IntPolynomial{1} - IntPolynomial::monomial(b));
    CHECK(series_div_geom(z, a, b, order).times(denom) == truncate(z, order));
  }
}

TEST_CASE("checked arithmetic") {
  const Coeff big = std::numeric_limits<Coeff>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Coeff>::min(), 1), std::overflow_error);
  CHECK(checked_add(2, 3) == 5);
}
