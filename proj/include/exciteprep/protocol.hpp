#pragma once

#include <optional>
#include <string>

#include "exciteprep/spectral.hpp"

namespace exciteprep {

/// Evaluated protocol parameters for driving the (0,0) -> (1,k) transition.
struct ProtocolPlan {
  int target = 0;
  bool resonance = false;              // w == w_{k,0} within tolerance
  std::optional<double> t_star;        // pi / |w_{k,0} - w|; unset at resonance
  int detuning_sign = +1;              // sign of w_{k,0} - w
  double lambda_max = 0.0;             // heuristic bound: the detuning itself
  double convergence_risk = 0.0;       // lambda / lambda_max
  double w_bar = 0.0;                  // min_{l != k} |w_{l,0} - w|
  bool spectator_ok = false;
  std::string spectator_reason;
  std::optional<double> m_denominator; // Z at t_star (>= 1)
  std::optional<double> p_success;     // 1/sqrt(Z) convention, as displayed
  std::optional<double> p_success_z;   // 1/Z variant, reported alongside
};

/// Success probability with the verbatim 1/sqrt(Z) prefactor:
///   p = (1/sqrt(Z(t))) * 4 lambda^2 |mu_{j,0}|^2 / (w_{j,0} - w)^2,
/// with the sinc-limit substitution lambda^2 |mu_{j,0}|^2 t^2 at resonance.
double success_probability(const ElectronicSystem& sys, double w, double lambda, double t, int j);

/// Same, with the 1/Z prefactor (the |amplitude|^2 convention).
double success_probability_z(const ElectronicSystem& sys, double w, double lambda, double t,
                             int j);

/// Evaluates t_star, the coupling-strength heuristic, the spectator-detuning
/// condition (the ">> " comparisons pass when lhs >= dominance * rhs) and the
/// success probability for target level k.
ProtocolPlan plan_protocol(const ElectronicSystem& sys, double w, double lambda, int k,
                           double dominance = 10.0);

}  // namespace exciteprep
