#pragma once

#include <vector>

#include "exciteprep/evolution.hpp"
#include "exciteprep/exppoly.hpp"
#include "exciteprep/spectral.hpp"

namespace exciteprep {

/// Symbolic perturbative coefficients c^(m)_{alpha,j}(t) for orders 0..order,
/// produced by the order-by-order recurrence. For an initial state (alpha0, k0)
/// the order-m coefficients vanish unless alpha == alpha0 xor (m mod 2), and
/// every order m >= 1 coefficient vanishes at t = 0.
class PerturbationTable {
 public:
  PerturbationTable(const ElectronicSystem& sys, double w, int order, CoupledIndex init);

  int order() const { return order_; }
  int levels() const { return levels_; }
  CoupledIndex initial() const { return init_; }
  double freq_tol() const { return freq_tol_; }

  const ExpPoly& coeff(int m, int alpha, int j) const;

  /// Supported order cap; table construction cost grows as N^(M+1).
  static constexpr int kMaxOrder = 6;

 private:
  int order_;
  int levels_;
  CoupledIndex init_;
  double freq_tol_;
  std::vector<ExpPoly> coeffs_;  // indexed (m * 2 + alpha) * N + j
};

PerturbationTable perturbation_table(const ElectronicSystem& sys, double w, int order,
                                     CoupledIndex init = {0, 0});

/// Right-hand side of the order-m recurrence at time t,
///   -i sum_k exp(-i (E_{1-alpha,k} - E_{alpha,j}) t) c^(m-1)_{1-alpha,k}(t) mu_{j,k},
/// evaluated numerically. Test hook for the derivative identity.
std::complex<double> recurrence_rhs(const PerturbationTable& table, const ElectronicSystem& sys,
                                    double w, int m, int alpha, int j, double t);

/// First-order closed form for initial state (0,0):
///   c^(1)_{alpha,j} = delta_{alpha,1} mu_{j,0} (exp(-i D t) - 1) / D,
///   D = E_{1-alpha,0} - E_{alpha,j},
/// with the secular limit -i mu_{j,0} t when D falls inside the resonance
/// tolerance. Cross-check against the recurrence engine.
ExpPoly closed_form_c1(const ElectronicSystem& sys, double w, int alpha, int j);

/// Second-order closed form for initial state (0,0) (alpha = 0 sector; the
/// alpha = 1 sector is identically zero). Resonant intermediates
/// |E_{0,0} - E_{1,k}| below tolerance are a domain error; the recurrence
/// engine, not this transcription, handles those.
ExpPoly closed_form_c2(const ElectronicSystem& sys, double w, int alpha, int j);

/// Raw truncated series sum_{m<=max_order} lambda^m c^(m)_{alpha,j}(t); not
/// normalized. max_order < 0 uses the full table order.
AmplitudeRecord truncated_amplitudes(const PerturbationTable& table, double lambda, double t,
                                     int max_order = -1);

/// Normalized first-order prepared state for initial state (0,0):
/// the (0,0) amplitude is 1/sqrt(Z) and the (1,j) amplitudes are
///   -2i lambda mu_{0,j} exp(i (E_j + E_0) t / 2) sinfac_j / sqrt(Z),
/// sinfac_j = sin((w_{j,0} - w) t / 2) / (w_{j,0} - w)  (t/2 at resonance),
/// Z = 1 + 4 lambda^2 sum_j |mu_{0,j}|^2 sinfac_j^2. The j sums run over all
/// levels including j = 0.
AmplitudeRecord first_order_state(const ElectronicSystem& sys, double w, double lambda, double t);

/// The normalization Z of the first-order state at time t (>= 1).
double first_order_normalization(const ElectronicSystem& sys, double w, double lambda, double t);

}  // namespace exciteprep
