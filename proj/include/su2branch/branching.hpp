#pragma once

// Branching generating functions m(t)_i = z(t)_i / ((1 - t^a)(1 - t^b)) built
// from the Coxeter-orbit exponents of the Heisenberg subsystem.

#include <cstddef>
#include <vector>

#include "su2branch/coxeter.hpp"
#include "su2branch/rootsys.hpp"
#include "su2branch/series.hpp"

namespace su2b {

/// Phi = { phi : (psi, phi) > 0 }, sliced by sigma-orbit.
struct HeisenbergSubsystem {
  std::vector<std::size_t> phi;                 // positive root indices, ascending
  std::vector<std::vector<std::size_t>> slices;  // slices[i] = Phi ∩ (Z.beta_i)_+
};

HeisenbergSubsystem heisenberg_subsystem(const RootSystem& rs, const OrbitTable& orbits);

struct BranchParams {
  int a = 0;
  int b = 0;
  int h = 0;
  int g = 0;
  int i_star = 0;  // simple-root index
  int group_order_F = 0;
  int group_order_Fstar = 0;
};

BranchParams branch_params(const RootSystem& rs);

/// z(t)_i for an extended index (0 = affine node, i + 1 = simple root i).
/// Hard-fails on any violated coefficient bound; for the special node the
/// orbit sum is compared against the closed form.
IntPolynomial z_polynomial(const RootSystem& rs, const OrbitTable& orbits, const HeisenbergSubsystem& hs,
                           const BranchParams& params, int ext_index);

/// Orbit-sum form for the special node: 2t^g + sum over Phi^{i*} \ {psi}.
IntPolynomial z_special_orbit_sum(const RootSystem& rs, const OrbitTable& orbits, const HeisenbergSubsystem& hs,
                                  const BranchParams& params);
/// t^{g-a+2} + t^{g-a+4} + ... + 2t^g + ... + t^{g+a-2}.
IntPolynomial z_special_closed_form(const BranchParams& params);

/// m(t)_i through t^order. Throws on a negative coefficient.
TruncatedSeries branching_series(const BranchParams& params, const IntPolynomial& z, int order);

/// Everything derived from one diagram type, built once and immutable.
class BranchingModel {
public:
  explicit BranchingModel(DiagramType dtype);

  const RootSystem& roots() const { return rs_; }
  const Bipartition& parts() const { return bp_; }
  const CoxeterAction& coxeter() const { return cox_; }
  const OrbitTable& orbits() const { return orbits_; }
  const HeisenbergSubsystem& heisenberg() const { return hs_; }
  const BranchParams& params() const { return params_; }
  int rank() const { return rs_.rank(); }
  int num_ext_nodes() const { return rs_.rank() + 1; }

  /// Extended-index marks (1 at the affine node).
  int ext_mark(int ext_index) const;
  /// Parity class of an extended node: 2 for the affine node, else the part.
  int ext_part(int ext_index) const;
  /// Graph distance to alpha_0 (0 for alpha_0 itself).
  int ext_distance(int ext_index) const;

  const IntPolynomial& z(int ext_index) const;
  TruncatedSeries series(int ext_index, int order) const;
  /// m_{n,i}: multiplicity of gamma_i in pi_n restricted to F*.
  Coeff multiplicity(int n, int ext_index) const;

private:
  void check_ext(int ext_index) const;

  RootSystem rs_;
  Bipartition bp_;
  CoxeterAction cox_;
  OrbitTable orbits_;
  HeisenbergSubsystem hs_;
  BranchParams params_;
  std::vector<IntPolynomial> z_;
};

}  // namespace su2b
