#include "exciteprep/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exciteprep/perturbation.hpp"

namespace exciteprep {

namespace {

double success_numerator(const ElectronicSystem& sys, double w, double lambda, double t, int j,
                         double tol) {
  const double detuning = gap(sys, j, 0) - w;
  const double mu_sq = std::norm(sys.coupling(j, 0));
  if (std::abs(detuning) <= tol) return lambda * lambda * mu_sq * t * t;
  return 4.0 * lambda * lambda * mu_sq / (detuning * detuning);
}

}  // namespace

double success_probability(const ElectronicSystem& sys, double w, double lambda, double t,
                           int j) {
  const double tol = degeneracy_tolerance(sys, w);
  const double z = first_order_normalization(sys, w, lambda, t);
  return success_numerator(sys, w, lambda, t, j, tol) / std::sqrt(z);
}

double success_probability_z(const ElectronicSystem& sys, double w, double lambda, double t,
                             int j) {
  const double tol = degeneracy_tolerance(sys, w);
  const double z = first_order_normalization(sys, w, lambda, t);
  return success_numerator(sys, w, lambda, t, j, tol) / z;
}

ProtocolPlan plan_protocol(const ElectronicSystem& sys, double w, double lambda, int k,
                           double dominance) {
  if (k < 0 || k >= sys.levels()) throw std::domain_error("plan_protocol: target out of range");
  if (!(lambda > 0.0)) throw std::domain_error("plan_protocol: lambda must be > 0");
  if (!(dominance >= 1.0)) throw std::invalid_argument("plan_protocol: dominance must be >= 1");

  const double tol = degeneracy_tolerance(sys, w);
  const double detuning = gap(sys, k, 0) - w;

  ProtocolPlan plan;
  plan.target = k;

  // Spectator detunings.
  double w_bar = 0.0;
  bool have_spectator = false;
  for (int l = 0; l < sys.levels(); ++l) {
    if (l == k) continue;
    const double d = std::abs(gap(sys, l, 0) - w);
    if (!have_spectator || d < w_bar) w_bar = d;
    have_spectator = true;
  }
  plan.w_bar = w_bar;

  if (std::abs(detuning) <= tol) {
    plan.resonance = true;
    plan.spectator_ok = false;
    plan.spectator_reason = "resonant target: spectator inequality undefined (t_star -> inf)";
    return plan;
  }

  plan.detuning_sign = detuning > 0.0 ? +1 : -1;
  // sin^2 is even in the detuning; keep t_star positive and record the sign.
  plan.t_star = std::numbers::pi / std::abs(detuning);
  plan.lambda_max = std::abs(detuning);
  plan.convergence_risk = lambda / plan.lambda_max;

  const double mu_sq = std::norm(sys.coupling(k, 0));
  const double lhs = 4.0 * lambda * lambda * mu_sq;
  const double spectator_denom = lhs - detuning * detuning;
  if (!have_spectator) {
    // Two-level system: nothing to detune against.
    plan.spectator_ok = true;
    plan.spectator_reason = "no spectator levels";
  } else if (spectator_denom <= 0.0) {
    plan.spectator_ok = false;
    plan.spectator_reason = "coupling too weak: 4 lambda^2 |mu_k0|^2 <= (w_k0 - w)^2";
  } else {
    const double rhs =
        (4.0 * lambda * lambda * (1.0 - mu_sq) / spectator_denom) * detuning * detuning;
    plan.spectator_ok = w_bar >= dominance * rhs;
    plan.spectator_reason = plan.spectator_ok ? "ok" : "spectator detunings too small";
  }

  plan.m_denominator = first_order_normalization(sys, w, lambda, *plan.t_star);
  plan.p_success = success_probability(sys, w, lambda, *plan.t_star, k);
  plan.p_success_z = success_probability_z(sys, w, lambda, *plan.t_star, k);
  return plan;
}

}  // namespace exciteprep
