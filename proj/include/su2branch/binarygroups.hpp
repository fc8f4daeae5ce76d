#pragma once

// Binary polyhedral groups F* in SU(2) as unit quaternions, with conjugacy
// classes, character tables, and character-theoretic branching multiplicities.
//
// A unit quaternion (w, x, y, z) stands for the SU(2) matrix
//   [[ w + x i,  y + z i],
//    [-y + z i,  w - x i]],   trace = 2w.
//
// Generators (phi = golden ratio):
//   A_{2n-1}  binary cyclic of order 2n  : (cos(pi/n), sin(pi/n), 0, 0)
//   D_{n+2}   binary dihedral, order 4n  : (cos(pi/n), sin(pi/n), 0, 0), (0, 0, 1, 0)
//   E6        binary tetrahedral, 24     : (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 1)/2
//   E7        binary octahedral, 48      : the E6 generators and (1, 1, 0, 0)/sqrt(2)
//   E8        binary icosahedral, 120    : (0, 1, 0, 0), (1, 1, 1, 1)/2, (phi, 1/phi, 1, 0)/2

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "su2branch/mckay.hpp"
#include "su2branch/rootsys.hpp"
#include "su2branch/series.hpp"

namespace su2b {

inline constexpr double kDedupTolerance = 1e-9;
inline constexpr double kRoundingTolerance = 1e-6;

struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double trace() const { return 2 * w; }
  /// Row-major 2x2 complex matrix.
  std::array<std::complex<double>, 4> matrix() const;
  bool near(const Quaternion& o, double eps = kDedupTolerance) const;
};

using GroupElement = Quaternion;

class FiniteGroup {
public:
  FiniteGroup(DiagramType dtype, std::vector<GroupElement> elements);

  const DiagramType& dtype() const { return dtype_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t multiply(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t identity() const { return 0; }
  std::size_t minus_identity() const { return minus_identity_; }
  /// Index of the element within tolerance, or order() if absent.
  std::size_t find(const GroupElement& q) const;

  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  std::size_t num_classes() const { return classes_.size(); }

private:
  DiagramType dtype_;
  std::vector<GroupElement> elements_;
  std::vector<std::uint16_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t minus_identity_ = 0;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Order of F* from the group family alone (2n, 4n, 24, 48, 120).
std::size_t nominal_group_order(const DiagramType& dtype);

/// Closure of the generators. Throws std::logic_error if the closure outgrows
/// the nominal order or the class count is not rank + 1.
FiniteGroup build_group(const DiagramType& dtype);

/// Conjugation orbits, ordered by smallest element index; identity class first.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& group);

struct CharacterTable {
  /// values[e][c]: character of the irreducible at extended node e on class c.
  std::vector<std::vector<std::complex<double>>> values;
  std::vector<int> dims;      // by extended node
  std::vector<int> node_map;  // canonical row -> extended node
};

/// Dixon-style table from class-sum eigenvectors, with rows assigned to
/// extended nodes through the tensor-with-defining-representation graph.
CharacterTable character_table(const FiniteGroup& group, const McKayGraph& graph);

/// Character of pi_n (dimension n + 1) at g, via chi_{n+1} = tr chi_n - chi_{n-1}.
double su2_character(const GroupElement& g, int n);

/// Class-weighted inner product <f, g> = (1/|G|) sum_c |C_c| f_c conj(g_c).
std::complex<double> class_inner_product(const FiniteGroup& group, const std::vector<std::complex<double>>& f,
                                         const std::vector<std::complex<double>>& g);

/// Round a real value to an integer; throws std::logic_error if the residual
/// (or the imaginary part) reaches kRoundingTolerance.
Coeff round_checked(std::complex<double> v, const char* what);

/// Multiplicity of gamma_{ext_index} in pi_n restricted to the group.
Coeff oracle_multiplicity(const FiniteGroup& group, const CharacterTable& table, int n, int ext_index);

/// dim S^n(C^2)^{F*} as the element average (1/|G|) sum_g chi_n(g).
Coeff molien_coefficient(const FiniteGroup& group, int n);

}  // namespace su2b
