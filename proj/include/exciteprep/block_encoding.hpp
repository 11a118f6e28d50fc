#pragma once

#include <Eigen/Dense>

namespace exciteprep {

/// N x N unitary whose first column is a registered target state, i.e.
/// U|0> = |psi>. Stands in for the state-preparation routine at matrix level.
class PreparationUnitary {
 public:
  /// Completes |psi> to a unitary by Gram-Schmidt against the computational
  /// basis; column 0 equals psi exactly.
  static PreparationUnitary from_target(const Eigen::VectorXcd& psi);

  const Eigen::MatrixXcd& matrix() const { return u_; }
  Eigen::VectorXcd target() const { return u_.col(0); }
  int dimension() const { return static_cast<int>(u_.rows()); }

 private:
  explicit PreparationUnitary(Eigen::MatrixXcd u) : u_(std::move(u)) {}
  Eigen::MatrixXcd u_;
};

/// The assembled Select operator over (j ancilla) x (R0 ancilla) x (system),
/// flattened qubit-major as j*2N + r*N + s, together with the block
/// <G|Select|G> picked out by |G> = |+>_j |+>_R0.
struct BlockEncodingCheck {
  Eigen::MatrixXcd select;         // 4N x 4N
  Eigen::MatrixXcd encoded_block;  // N x N
  double c_norm = 0.0;             // measured against a target; see verify
};

/// Select = C_j[U] * (X_j (x) controlled-reflection) * C_j[U]^dagger where
/// C_j[U] applies U0 or U1 on the system conditioned on the j ancilla and the
/// reflection (controlled on R0 = |1>) is 2|0><0| - 1 on the system, the
/// +1-on-all-zeros sign that encodes the |0><0| projector. Because the X on j
/// flips the control before re-preparation, the branch prepared with U_j is
/// unprepared with U_{1-j}.
BlockEncodingCheck build_select(const PreparationUnitary& u0, const PreparationUnitary& u1);

struct BlockEncodingVerification {
  double c_norm = 0.0;        // least-squares scale: block ~ mu / c_norm
  double max_residual = 0.0;  // max entrywise |block - mu / c_norm|
};

/// Fits the proportionality constant between the encoded block and a target
/// coupling matrix and reports the residual; also records c_norm on `check`.
BlockEncodingVerification verify_block_encoding(BlockEncodingCheck& check,
                                                const Eigen::MatrixXcd& mu_target);

/// Total LCU 1-norm of the coupled Hamiltonian:
/// lambda_DF_He + 4 lambda + w / 2.
double one_norm_total(double lambda_df_he, double lambda, double w);

}  // namespace exciteprep
