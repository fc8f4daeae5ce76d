#pragma once

// Simply-laced root systems in the simple-root basis.
//
// Node labeling convention ("su2branch-nodes-v1"). Simple roots are indexed
// 0..rank-1 inside this library; the extended diagram (see mckay.hpp) uses
// index 0 for the affine node and i+1 for simple root i, so extended indices
// coincide with the usual 1-based numbering.
//
//   A_l : path 0 - 1 - ... - (l-1)
//   D_l : path 0 - 1 - ... - (l-3), with fork tails (l-2) and (l-1) both
//         attached to node l-3 (the branch node)
//   E_l : path 0 - 1 - ... - (l-2), with the short branch node (l-1)
//         attached to node 2 (the branch node)

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace su2b {

enum class Family { A, D, E };

/// Diagram family and rank. Only the types reached by binary polyhedral
/// groups are constructible: A with odd rank, D with rank >= 4, E6/E7/E8.
class DiagramType {
public:
  DiagramType(Family family, int rank);

  /// Parses "A7", "d5", "E8". Throws std::invalid_argument on bad syntax or
  /// unsupported types.
  static DiagramType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string to_string() const;

  friend bool operator==(const DiagramType&, const DiagramType&) = default;

private:
  Family family_;
  int rank_;
};

/// Every type in the classical table: A3..A13 (odd), D4..D12, E6, E7, E8.
std::vector<DiagramType> table_types();

/// Integer coordinates over the simple roots.
struct Root {
  std::vector<int> coeffs;

  std::size_t rank() const { return coeffs.size(); }
  int height() const;
  bool is_positive() const;
  bool is_negative() const;

  Root operator-() const;
  friend Root operator+(const Root& x, const Root& y);
  friend Root operator-(const Root& x, const Root& y);
  friend Root operator*(int k, const Root& x);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  static Root simple(std::size_t rank, int i);
  std::string to_string() const;
};

class RootSystem {
public:
  /// Closure construction from the simple roots; validates the structural
  /// invariants (counts, h, highest root) and throws std::logic_error if any fail.
  explicit RootSystem(DiagramType dtype);

  const DiagramType& dtype() const { return dtype_; }
  int rank() const { return dtype_.rank(); }
  /// Cartan matrix entry (alpha_i, alpha_j).
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(static_cast<std::size_t>(i)); }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// All roots: positive roots first, then their negatives in matching order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::optional<std::size_t> index_of(const Root& r) const;
  /// Index of -roots()[idx].
  std::size_t negate_index(std::size_t idx) const;
  std::size_t simple_index(int i) const;

  const Root& highest_root() const { return positive_.back(); }
  const std::vector<int>& marks() const { return highest_root().coeffs; }
  int coxeter_number() const { return coxeter_number_; }

  int inner_product(const Root& x, const Root& y) const;
  /// s_i(x) = x - (x, alpha_i) alpha_i.
  Root reflect(int i, const Root& x) const;

private:
  DiagramType dtype_;
  std::vector<int> cartan_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<Root> positive_;
  std::vector<Root> roots_;
  std::vector<std::pair<Root, std::size_t>> lookup_;  // sorted by root
  int coxeter_number_ = 0;
};

inline RootSystem build_root_system(DiagramType dtype) { return RootSystem(dtype); }

/// Branch node for D/E, midpoint of the path for A.
int special_index(const RootSystem& rs);

/// Graph distance from simple node i to the affine node alpha_0 (the affine
/// node attaches to the nodes with (psi, alpha_i) > 0, at distance 1).
int distance_to_affine(const RootSystem& rs, int i);

}  // namespace su2b
