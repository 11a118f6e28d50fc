#include "exciteprep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "exciteprep/rng.hpp"

namespace exciteprep {

namespace {

void check_index(int k, int n, const char* what) {
  if (k < 0 || k >= n) throw std::domain_error(std::string(what) + " index out of range");
}

}  // namespace

ElectronicSystem::ElectronicSystem(std::vector<double> energies, Eigen::MatrixXcd coupling) {
  const auto n = static_cast<Eigen::Index>(energies.size());
  if (n < 1) throw std::invalid_argument("ElectronicSystem: at least one level required");
  if (coupling.rows() != n || coupling.cols() != n)
    throw std::invalid_argument("ElectronicSystem: coupling must be N x N");

  for (double e : energies)
    if (!std::isfinite(e)) throw std::invalid_argument("ElectronicSystem: non-finite energy");
  if (!coupling.allFinite())
    throw std::invalid_argument("ElectronicSystem: non-finite coupling entry");

  double max_mu = coupling.cwiseAbs().maxCoeff();
  const double herm_tol = 1e-12 * std::max(max_mu, 1.0);
  if ((coupling - coupling.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw std::invalid_argument("ElectronicSystem: coupling is not Hermitian");

  // Sort energies non-decreasing, permuting mu consistently.
  std::vector<int> perm(energies.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return energies[a] < energies[b]; });

  energies_.resize(energies.size());
  coupling_.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    energies_[j] = energies[perm[j]];
    for (Eigen::Index k = 0; k < n; ++k) coupling_(j, k) = coupling(perm[j], perm[k]);
  }

  energy_scale_ = 0.0;
  for (double e : energies_) energy_scale_ = std::max(energy_scale_, std::abs(e));
}

double ElectronicSystem::energy(int k) const {
  check_index(k, levels(), "energy");
  return energies_[k];
}

Complex ElectronicSystem::coupling(int j, int k) const {
  check_index(j, levels(), "coupling row");
  check_index(k, levels(), "coupling column");
  return coupling_(j, k);
}

double coupled_energy(const ElectronicSystem& sys, double w, CoupledIndex idx) {
  if (idx.alpha != 0 && idx.alpha != 1) throw std::domain_error("coupled_energy: alpha not in {0,1}");
  check_index(idx.k, sys.levels(), "coupled_energy");
  const double sign = (idx.alpha == 0) ? 1.0 : -1.0;
  return sys.energy(idx.k) + sign * w / 2.0;
}

double gap(const ElectronicSystem& sys, int j, int k) {
  return sys.energy(j) - sys.energy(k);
}

double transition_frequency(const ElectronicSystem& sys, double w, CoupledIndex from,
                            CoupledIndex to) {
  return coupled_energy(sys, w, to) - coupled_energy(sys, w, from);
}

double degeneracy_tolerance(const ElectronicSystem& sys, double w) {
  return 1e-9 * (sys.energy_scale() + std::abs(w) + 1.0);
}

double min_transition_frequency(const ElectronicSystem& sys, double w) {
  const int n = sys.levels();
  const double tol = degeneracy_tolerance(sys, w);
  double best = 0.0;
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const double f =
          std::abs(transition_frequency(sys, w, unflatten(a, n), unflatten(b, n)));
      if (f > tol && (best == 0.0 || f < best)) best = f;
    }
  }
  return best;
}

ElectronicSystem generate_system(int n, std::uint64_t seed, double gap_scale,
                                 double coupling_scale) {
  if (n < 2) throw std::invalid_argument("generate_system: N >= 2 required");
  if (!(gap_scale > 0.0)) throw std::invalid_argument("generate_system: gap_scale must be > 0");
  if (coupling_scale < 0.0)
    throw std::invalid_argument("generate_system: coupling_scale must be >= 0");

  Xoshiro256pp rng(seed);

  std::vector<double> energies(n);
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    acc += rng.uniform(0.5, 1.5) * gap_scale;
    energies[k] = acc;
  }

  Eigen::MatrixXcd raw(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) raw(j, k) = rng.complex_gaussian();
  Eigen::MatrixXcd mu = 0.5 * coupling_scale * (raw + raw.adjoint());

  return {std::move(energies), std::move(mu)};
}

}  // namespace exciteprep
