#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

namespace exciteprep {

/// A unit vector |psi> together with its decomposition against a target basis
/// index m: overlap = <phi_m|psi> and perp_norm = ||(1 - |phi_m><phi_m|) psi||.
/// For the ground-state instance these are the (a, a_perp) amplitudes; for an
/// excited-state instance, (b, b_perp).
struct ApproxEigenstate {
  Eigen::VectorXcd vector;
  int target = 0;
  std::complex<double> overlap;
  double perp_norm = 0.0;
};

/// Validates normalization and fills in the decomposition fields.
ApproxEigenstate make_approx_eigenstate(Eigen::VectorXcd psi, int target);

/// Rank-2 reflection-style coupling mu = |psi0><psik| + |psik><psi0|.
/// Requires <psik|psi0> = 0 within 1e-10 (precondition error otherwise);
/// the result is Hermitian with spectrum {+1, -1, 0, ...}.
Eigen::MatrixXcd reflection_coupling(const ApproxEigenstate& psi0, const ApproxEigenstate& psik);

/// Entrywise check of the three matrix-element bound classes for the
/// reflection coupling built from (psi0 targeting 0, psik targeting k):
///   class 1: |mu_{l,0}|  <= |conj(b_perp) a|   for l != k,
///   class 2: |mu_{k,l'}| <= |conj(b) a_perp|   for l' != 0,
///   class 3: |mu_{l,l'}| <= |conj(b_perp) a_perp| for l, l' not in {0, k}.
struct BoundReport {
  bool all_hold = true;
  double max_ratio[3] = {0.0, 0.0, 0.0};  // measured |mu| / bound per class
  int checked[3] = {0, 0, 0};
  int violations[3] = {0, 0, 0};
  double slack = 0.0;  // tolerance applied to the inequalities
};

BoundReport check_matrix_element_bounds(const ApproxEigenstate& psi0,
                                        const ApproxEigenstate& psik, double slack = 1e-12);

/// Gram-Schmidt: keeps `first` (normalized) and orthogonalizes `second`
/// against it. Offered separately; reflection_coupling never re-orthogonalizes
/// silently.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> orthonormalize_pair(Eigen::VectorXcd first,
                                                                  Eigen::VectorXcd second);

/// Seeded synthetic pair: exact eigenvectors |e_0> and |e_k> plus orthogonal
/// Gaussian noise of relative amplitude `noise`, then pair-orthonormalized.
std::pair<ApproxEigenstate, ApproxEigenstate> synthetic_eigenstate_pair(int n, int k, double noise,
                                                                        std::uint64_t seed);

/// Seeded Haar-ish random orthonormal pair (targets 0 and k), for the
/// block-encoding sweeps.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> random_orthonormal_pair(int n, std::uint64_t seed);

}  // namespace exciteprep
