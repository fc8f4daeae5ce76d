#pragma once

// Bipartite Coxeter element sigma = tau2 * tau1 and its orbits on the roots.

#include <cstdint>
#include <string>
#include <vector>

#include "su2branch/rootsys.hpp"

namespace su2b {

/// Permutation of the root list of a RootSystem (index map over roots()).
class RootPermutation {
public:
  RootPermutation() = default;
  explicit RootPermutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {}

  static RootPermutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t idx) const { return image_[idx]; }
  const std::vector<std::uint32_t>& image() const { return image_; }

  /// (this after other)(x) = this(other(x)).
  RootPermutation after(const RootPermutation& other) const;
  RootPermutation power(int k) const;
  bool is_identity() const;

  friend bool operator==(const RootPermutation&, const RootPermutation&) = default;

private:
  std::vector<std::uint32_t> image_;
};

/// Two-coloring of the Dynkin tree; part 1 holds every node not orthogonal to psi.
struct Bipartition {
  std::vector<int> I1;
  std::vector<int> I2;
  std::vector<int> part;  // part[i] in {1, 2}

  int part_of(int i) const { return part.at(static_cast<std::size_t>(i)); }
};

Bipartition bipartition(const RootSystem& rs);

struct CoxeterAction {
  RootPermutation tau1;
  RootPermutation tau2;
  RootPermutation sigma;  // tau2 after tau1
  int order = 0;          // order of sigma on the roots
};

/// Permutation of the roots induced by the simple reflection s_i.
RootPermutation reflection_permutation(const RootSystem& rs, int i);

CoxeterAction coxeter_element(const RootSystem& rs, const Bipartition& bp);

struct OrbitEntry {
  int orbit = -1;  // i_phi
  int k = 0;       // part of i_phi
  int n = 0;       // exponent n(phi) in [1, h]
  int steps = 0;   // m with sigma^m(phi) = beta_{i_phi}
};

/// Orbit decomposition of the roots under sigma, seeded at the signed simple
/// roots beta_i (alpha_i for i in I1, -alpha_i for i in I2).
class OrbitTable {
public:
  OrbitTable(const RootSystem& rs, const CoxeterAction& cox, const Bipartition& bp);

  const std::vector<Root>& signed_simples() const { return beta_; }
  /// Roots of Z.beta_i in the order beta_i, sigma(beta_i), sigma^2(beta_i), ...
  const std::vector<std::size_t>& orbit(int i) const { return orbits_.at(static_cast<std::size_t>(i)); }
  /// Orbit label of any root (positive or negative).
  int orbit_of(std::size_t root_idx) const { return orbit_of_.at(root_idx); }
  /// Entry for a positive root index.
  const OrbitEntry& entry(std::size_t positive_idx) const { return entries_.at(positive_idx); }
  const std::vector<OrbitEntry>& entries() const { return entries_; }
  /// Positive part of orbit i.
  std::vector<std::size_t> positive_part(int i) const;

private:
  std::vector<Root> beta_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<OrbitEntry> entries_;
  std::size_t num_positive_ = 0;
};

inline OrbitTable orbit_table(const RootSystem& rs, const CoxeterAction& cox, const Bipartition& bp) {
  return OrbitTable(rs, cox, bp);
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Steinberg's sigma^g = longest element and the companion identities.
/// Never throws on a failed check; failures carry the offending root in detail.
std::vector<Check> longest_element_checks(const RootSystem& rs, const CoxeterAction& cox, const Bipartition& bp);

}  // namespace su2b
