#include "exciteprep/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "exciteprep/rng.hpp"

namespace exciteprep {

ApproxEigenstate make_approx_eigenstate(Eigen::VectorXcd psi, int target) {
  const int n = static_cast<int>(psi.size());
  if (target < 0 || target >= n)
    throw std::domain_error("make_approx_eigenstate: target out of range");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("make_approx_eigenstate: state not normalized");

  ApproxEigenstate state;
  state.target = target;
  state.overlap = psi[target];
  Eigen::VectorXcd perp = psi;
  perp[target] = 0.0;
  state.perp_norm = perp.norm();
  state.vector = std::move(psi);
  return state;
}

Eigen::MatrixXcd reflection_coupling(const ApproxEigenstate& psi0,
                                     const ApproxEigenstate& psik) {
  if (psi0.vector.size() != psik.vector.size())
    throw std::domain_error("reflection_coupling: dimension mismatch");
  if (std::abs(psik.vector.dot(psi0.vector)) > 1e-10)
    throw std::invalid_argument("reflection_coupling: states are not orthogonal");
  return psi0.vector * psik.vector.adjoint() + psik.vector * psi0.vector.adjoint();
}

BoundReport check_matrix_element_bounds(const ApproxEigenstate& psi0,
                                        const ApproxEigenstate& psik, double slack) {
  const int n = static_cast<int>(psi0.vector.size());
  const int k = psik.target;
  const Eigen::MatrixXcd mu = reflection_coupling(psi0, psik);

  const double a = std::abs(psi0.overlap);
  const double a_perp = psi0.perp_norm;
  const double b = std::abs(psik.overlap);
  const double b_perp = psik.perp_norm;
  const double bound[3] = {b_perp * a, b * a_perp, b_perp * a_perp};

  BoundReport report;
  report.slack = slack;
  auto tally = [&](int cls, double value) {
    report.checked[cls] += 1;
    if (bound[cls] > 0.0)
      report.max_ratio[cls] = std::max(report.max_ratio[cls], value / bound[cls]);
    if (value > bound[cls] + slack) {
      report.violations[cls] += 1;
      report.all_hold = false;
    }
  };

  for (int l = 0; l < n; ++l)
    if (l != k) tally(0, std::abs(mu(l, 0)));
  for (int lp = 0; lp < n; ++lp)
    if (lp != 0) tally(1, std::abs(mu(k, lp)));
  for (int l = 0; l < n; ++l)
    for (int lp = 0; lp < n; ++lp)
      if (l != 0 && l != k && lp != 0 && lp != k) tally(2, std::abs(mu(l, lp)));
  return report;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> orthonormalize_pair(Eigen::VectorXcd first,
                                                                  Eigen::VectorXcd second) {
  const double n1 = first.norm();
  if (n1 < 1e-14) throw std::invalid_argument("orthonormalize_pair: first vector is zero");
  first /= n1;
  second -= first.dot(second) * first;
  const double n2 = second.norm();
  if (n2 < 1e-14)
    throw std::invalid_argument("orthonormalize_pair: vectors are linearly dependent");
  second /= n2;
  return {std::move(first), std::move(second)};
}

std::pair<ApproxEigenstate, ApproxEigenstate> synthetic_eigenstate_pair(int n, int k, double noise,
                                                                        std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("synthetic_eigenstate_pair: N >= 2 required");
  if (k <= 0 || k >= n)
    throw std::domain_error("synthetic_eigenstate_pair: excited target must be in 1..N-1");
  if (noise < 0.0) throw std::invalid_argument("synthetic_eigenstate_pair: negative noise");

  Xoshiro256pp rng(seed);
  auto noisy_basis_state = [&](int target) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.complex_gaussian();
    v[target] = 0.0;  // noise orthogonal to the exact eigenvector
    const double vn = v.norm();
    if (vn > 0.0) v *= noise / vn;
    v[target] = 1.0;
    return (v / v.norm()).eval();
  };

  Eigen::VectorXcd raw0 = noisy_basis_state(0);
  Eigen::VectorXcd rawk = noisy_basis_state(k);
  auto [psi0, psik] = orthonormalize_pair(std::move(raw0), std::move(rawk));
  return {make_approx_eigenstate(std::move(psi0), 0), make_approx_eigenstate(std::move(psik), k)};
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> random_orthonormal_pair(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_orthonormal_pair: N >= 2 required");
  Xoshiro256pp rng(seed);
  Eigen::VectorXcd u(n), v(n);
  for (int i = 0; i < n; ++i) u[i] = rng.complex_gaussian();
  for (int i = 0; i < n; ++i) v[i] = rng.complex_gaussian();
  return orthonormalize_pair(std::move(u), std::move(v));
}

}  // namespace exciteprep
