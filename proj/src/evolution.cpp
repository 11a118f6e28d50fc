#include "exciteprep/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace exciteprep {

CoupledState basis_state(int levels, CoupledIndex idx) {
  if (idx.alpha != 0 && idx.alpha != 1) throw std::domain_error("basis_state: alpha not in {0,1}");
  if (idx.k < 0 || idx.k >= levels) throw std::domain_error("basis_state: k out of range");
  CoupledState state;
  state.amplitudes = Eigen::VectorXcd::Zero(2 * levels);
  state.amplitudes[flatten(idx, levels)] = 1.0;
  return state;
}

Eigen::MatrixXcd assemble_hamiltonian(const ElectronicSystem& sys, double w, double lambda) {
  const int n = sys.levels();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    h(k, k) = sys.energy(k) + w / 2.0;
    h(n + k, n + k) = sys.energy(k) - w / 2.0;
  }
  h.block(0, n, n, n) = lambda * sys.coupling();
  h.block(n, 0, n, n) = lambda * sys.coupling().adjoint();
  return h;
}

Propagator::Propagator(const Eigen::MatrixXcd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw std::domain_error("Propagator: matrix must be square");
  const double scale = std::max(hamiltonian.cwiseAbs().maxCoeff(), 1.0);
  if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("Propagator: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Propagator: eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

CoupledState Propagator::apply(const CoupledState& psi0, double t) const {
  if (psi0.amplitudes.size() != eigenvectors_.rows())
    throw std::domain_error("Propagator: state dimension mismatch");
  if (!std::isfinite(t)) throw std::domain_error("Propagator: non-finite time");
  Eigen::VectorXcd modal = eigenvectors_.adjoint() * psi0.amplitudes;
  for (Eigen::Index i = 0; i < modal.size(); ++i)
    modal[i] *= std::polar(1.0, -eigenvalues_[i] * t);
  return {eigenvectors_ * modal};
}

CoupledState evolve(const Eigen::MatrixXcd& hamiltonian, const CoupledState& psi0, double t) {
  return Propagator(hamiltonian).apply(psi0, t);
}

AmplitudeRecord interaction_amplitudes(const ElectronicSystem& sys, double w,
                                       const CoupledState& state, double t) {
  const int n = sys.levels();
  if (state.dimension() != 2 * n)
    throw std::domain_error("interaction_amplitudes: state dimension mismatch");
  AmplitudeRecord record;
  record.levels = n;
  record.c.resize(2 * n);
  record.probability.resize(2 * n);
  for (int pos = 0; pos < 2 * n; ++pos) {
    const double e = coupled_energy(sys, w, unflatten(pos, n));
    record.c[pos] = std::polar(1.0, e * t) * state.amplitudes[pos];
    record.probability[pos] = std::norm(state.amplitudes[pos]);
  }
  return record;
}

}  // namespace exciteprep
