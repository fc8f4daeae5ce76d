#pragma once

// Test-only oracles. None of these go through the library's permutation,
// orbit, or series-division code paths.

#include <cstdint>
#include <map>
#include <vector>

#include "su2branch/rootsys.hpp"
#include "su2branch/series.hpp"

namespace su2b::oracle {

/// Coefficient of t^n in z(t) / ((1 - t^a)(1 - t^b)) by counting the pairs
/// (p, q) >= 0 with p a + q b = n - k for every term z_k t^k.
inline std::int64_t geometric_coefficient(const std::map<int, std::int64_t>& z, int a, int b, int n) {
  std::int64_t total = 0;
  for (const auto& [k, c] : z) {
    const int rest = n - k;
    if (rest < 0) continue;
    std::int64_t count = 0;
    for (int p = 0; p * a <= rest; ++p)
      if ((rest - p * a) % b == 0) ++count;
    total += c * count;
  }
  return total;
}

/// sigma = tau2 tau1 applied to coordinates directly via the Cartan matrix.
inline Root apply_sigma(const RootSystem& rs, const std::vector<int>& part, Root x) {
  for (int k : {1, 2})
    for (int i = 0; i < rs.rank(); ++i) {
      if (part[static_cast<std::size_t>(i)] != k) continue;
      int pairing = 0;
      for (int j = 0; j < rs.rank(); ++j) pairing += x.coeffs[static_cast<std::size_t>(j)] * rs.cartan(j, i);
      x.coeffs[static_cast<std::size_t>(i)] -= pairing;
    }
  return x;
}

inline Root apply_sigma_power(const RootSystem& rs, const std::vector<int>& part, Root x, int k) {
  for (int s = 0; s < k; ++s) x = apply_sigma(rs, part, x);
  return x;
}

/// Deterministic linear congruential generator for hand-rolled properties.
struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

}  // namespace su2b::oracle
