#include "exciteprep/block_encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace exciteprep {

PreparationUnitary PreparationUnitary::from_target(const Eigen::VectorXcd& psi) {
  const int n = static_cast<int>(psi.size());
  if (n < 1) throw std::invalid_argument("PreparationUnitary: empty target");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("PreparationUnitary: target not normalized");

  Eigen::MatrixXcd u(n, n);
  u.col(0) = psi;
  int filled = 1;
  for (int cand = 0; cand < n && filled < n; ++cand) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    v[cand] = 1.0;
    // Two classical Gram-Schmidt passes keep orthogonality near machine
    // precision.
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < filled; ++c) v -= u.col(c).dot(v) * u.col(c);
    const double vn = v.norm();
    if (vn < 1e-6) continue;  // candidate (nearly) inside the current span
    u.col(filled++) = v / vn;
  }
  if (filled != n) throw std::runtime_error("PreparationUnitary: basis completion failed");
  return PreparationUnitary(std::move(u));
}

BlockEncodingCheck build_select(const PreparationUnitary& u0, const PreparationUnitary& u1) {
  const int n = u0.dimension();
  if (u1.dimension() != n) throw std::domain_error("build_select: dimension mismatch");

  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);

  // C_j[U]: block diagonal over (j, r), applying U_j on the system.
  Eigen::MatrixXcd prepare = Eigen::MatrixXcd::Zero(4 * n, 4 * n);
  prepare.block(0, 0, n, n) = u0.matrix();
  prepare.block(n, n, n, n) = u0.matrix();
  prepare.block(2 * n, 2 * n, n, n) = u1.matrix();
  prepare.block(3 * n, 3 * n, n, n) = u1.matrix();

  // Reflection about the system all-zeros state, +1 on |0...0>.
  Eigen::MatrixXcd reflect = 2.0 * (eye.col(0) * eye.row(0)) - eye;

  // X on j tensor (identity on R0 = |0>, reflection on R0 = |1>).
  Eigen::MatrixXcd middle = Eigen::MatrixXcd::Zero(4 * n, 4 * n);
  middle.block(0, 2 * n, n, n) = eye;
  middle.block(n, 3 * n, n, n) = reflect;
  middle.block(2 * n, 0, n, n) = eye;
  middle.block(3 * n, n, n, n) = reflect;

  BlockEncodingCheck check;
  check.select = prepare * middle * prepare.adjoint();

  // <G|Select|G> with |G> = |+>_j |+>_R0.
  Eigen::MatrixXcd grid(4 * n, n);
  for (int b = 0; b < 4; ++b) grid.block(b * n, 0, n, n) = 0.5 * eye;
  check.encoded_block = grid.adjoint() * check.select * grid;
  return check;
}

BlockEncodingVerification verify_block_encoding(BlockEncodingCheck& check,
                                                const Eigen::MatrixXcd& mu_target) {
  if (mu_target.rows() != check.encoded_block.rows() ||
      mu_target.cols() != check.encoded_block.cols())
    throw std::domain_error("verify_block_encoding: target dimension mismatch");
  const double mu_sq = mu_target.squaredNorm();
  if (mu_sq == 0.0) throw std::domain_error("verify_block_encoding: zero target");

  // Least-squares x minimizing ||block - x mu||_F; c_norm = 1/x.
  const double x = ((mu_target.adjoint() * check.encoded_block).trace()).real() / mu_sq;

  BlockEncodingVerification result;
  result.c_norm = 1.0 / x;
  result.max_residual = (check.encoded_block - x * mu_target).cwiseAbs().maxCoeff();
  check.c_norm = result.c_norm;
  return result;
}

double one_norm_total(double lambda_df_he, double lambda, double w) {
  if (lambda_df_he < 0.0) throw std::domain_error("one_norm_total: negative lambda_DF");
  if (lambda < 0.0) throw std::domain_error("one_norm_total: negative lambda");
  if (w < 0.0) throw std::domain_error("one_norm_total: negative w");
  return lambda_df_he + 4.0 * lambda + w / 2.0;
}

}  // namespace exciteprep
