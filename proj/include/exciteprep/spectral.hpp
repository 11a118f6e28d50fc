#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace exciteprep {

using Complex = std::complex<double>;

/// Label (alpha, k) of a product basis state |alpha>|phi_k>: a qubit bit and
/// an electronic level index. Flattened position is alpha * N + k (qubit-major).
struct CoupledIndex {
  int alpha = 0;
  int k = 0;

  friend bool operator==(const CoupledIndex&, const CoupledIndex&) = default;
};

inline int flatten(CoupledIndex idx, int levels) { return idx.alpha * levels + idx.k; }
inline CoupledIndex unflatten(int pos, int levels) { return {pos / levels, pos % levels}; }

/// Externally supplied evolution/protocol knobs: ancilla splitting w, coupling
/// strength lambda, evolution time t.
struct ProtocolParams {
  double w = 0.0;
  double lambda = 0.0;
  double t = 0.0;
};

/// The physics input: eigenvalues E_k of the electronic Hamiltonian and a
/// Hermitian coupling matrix mu expressed in that eigenbasis.
///
/// Energies are accepted unsorted; the constructor sorts them non-decreasing
/// and applies the same permutation to both sides of mu. Degenerate energies
/// are allowed. Immutable after construction.
class ElectronicSystem {
 public:
  ElectronicSystem(std::vector<double> energies, Eigen::MatrixXcd coupling);

  int levels() const { return static_cast<int>(energies_.size()); }
  double energy(int k) const;
  const std::vector<double>& energies() const { return energies_; }
  const Eigen::MatrixXcd& coupling() const { return coupling_; }
  Complex coupling(int j, int k) const;

  /// max_k |E_k|, used for relative tolerances.
  double energy_scale() const { return energy_scale_; }

 private:
  std::vector<double> energies_;
  Eigen::MatrixXcd coupling_;
  double energy_scale_ = 0.0;
};

/// E_{alpha,k} = E_k + (-1)^alpha * w / 2.
double coupled_energy(const ElectronicSystem& sys, double w, CoupledIndex idx);

/// w_{j,k} = E_j - E_k.
double gap(const ElectronicSystem& sys, int j, int k);

/// coupled_energy(to) - coupled_energy(from).
double transition_frequency(const ElectronicSystem& sys, double w, CoupledIndex from,
                            CoupledIndex to);

/// Frequencies closer than this merge into one bucket; a bucket this close to
/// zero is treated as exactly resonant (secular integration branch).
double degeneracy_tolerance(const ElectronicSystem& sys, double w);

/// Smallest nonzero |transition_frequency| over all coupled-basis pairs,
/// or 0 if every pair is degenerate.
double min_transition_frequency(const ElectronicSystem& sys, double w);

/// Deterministic random system: energies are cumulative sums of
/// uniform(0.5, 1.5) * gap_scale draws, coupling is the Hermitian part of a
/// complex Gaussian matrix scaled by coupling_scale. PRNG is xoshiro256++
/// seeded with `seed`; identical seeds give identical systems byte-for-byte.
ElectronicSystem generate_system(int n, std::uint64_t seed, double gap_scale = 1.0,
                                 double coupling_scale = 1.0);

}  // namespace exciteprep
