#pragma once

#include <Eigen/Dense>

#include "exciteprep/spectral.hpp"

namespace exciteprep {

/// Complex amplitude vector over the flattened coupled basis (length 2N).
struct CoupledState {
  Eigen::VectorXcd amplitudes;

  int dimension() const { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

/// Basis state |alpha>|phi_k> as a CoupledState of dimension 2N.
CoupledState basis_state(int levels, CoupledIndex idx);

/// Per-index interaction-picture coefficient c_{alpha,k} and probability |c|^2.
struct AmplitudeRecord {
  int levels = 0;
  Eigen::VectorXcd c;            // flattened, length 2N
  Eigen::VectorXd probability;   // |c|^2

  std::complex<double> at(CoupledIndex idx) const { return c[flatten(idx, levels)]; }
  double probability_at(CoupledIndex idx) const { return probability[flatten(idx, levels)]; }
  double total_probability() const { return probability.sum(); }
};

/// Dense 2N x 2N coupled Hamiltonian in qubit-major ordering:
///   [[diag(E) + (w/2) I,  lambda mu ],
///    [ lambda mu,  diag(E) - (w/2) I]].
Eigen::MatrixXcd assemble_hamiltonian(const ElectronicSystem& sys, double w, double lambda);

/// Cached Hermitian eigendecomposition of H; applies exp(-iHt) exactly, so
/// evolution is unitary by construction. Reused across a t-grid sweep.
class Propagator {
 public:
  explicit Propagator(const Eigen::MatrixXcd& hamiltonian);

  CoupledState apply(const CoupledState& psi0, double t) const;

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// exp(-iHt) psi0 via one-shot eigendecomposition.
CoupledState evolve(const Eigen::MatrixXcd& hamiltonian, const CoupledState& psi0, double t);

/// Strips the free phases: c_{alpha,k} = exp(+i E_{alpha,k} t) <alpha,phi_k|psi>.
AmplitudeRecord interaction_amplitudes(const ElectronicSystem& sys, double w,
                                       const CoupledState& state, double t);

}  // namespace exciteprep
