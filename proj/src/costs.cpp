#include "exciteprep/costs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace exciteprep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double repetitions_to_success(const CostModel& model, double mu_j0) {
  const double detuning = model.w - model.w_j0;
  return model.m_denominator * detuning * detuning /
         (4.0 * mu_j0 * mu_j0 * model.lambda * model.lambda);
}

double excitation_per_attempt(const CostModel& model) {
  const double ground =
      (sos_cost(model.d0) + qpe_cost(model.lambda_df_he, model.delta0, model.prep_sel_he)) /
      (model.a * model.a);
  const double t = std::numbers::pi / std::abs(model.w_j0 - model.w);
  const double lambda_df_total = model.lambda_df_he + 4.0 * model.lambda + model.w / 2.0;
  const double evolution = evolution_cost(t, model.epsilon, lambda_df_total, model.prep_sel_he,
                                          sos_cost(model.d0), sos_cost(model.dj));
  const double projection = qpe_cost(model.lambda_df_he, model.deltaj, model.prep_sel_he);
  return ground + evolution + projection;
}

}  // namespace

std::string validate_cost_model(const CostModel& model) {
  if (model.d0 < 1) return "d0 must be >= 1";
  if (model.dj < 1) return "dj must be >= 1";
  if (!(model.prep_sel_he > 0.0)) return "prep_sel_he must be > 0";
  if (!(model.lambda_df_he > 0.0)) return "lambda_df_he must be > 0";
  if (!(model.delta0 > 0.0)) return "delta0 must be > 0";
  if (!(model.deltaj > 0.0)) return "deltaj must be > 0";
  if (!(model.a > 0.0 && model.a <= 1.0)) return "a must be in (0, 1]";
  if (!(model.b > 0.0 && model.b <= 1.0)) return "b must be in (0, 1]";
  if (model.mu_j0 < 0.0) return "mu_j0 must be >= 0";
  if (model.lambda < 0.0) return "lambda must be >= 0";
  if (!(model.epsilon > 0.0 && model.epsilon < 1.0)) return "epsilon must be in (0, 1)";
  if (!(model.m_denominator >= 1.0)) return "m_denominator must be >= 1";
  return {};
}

double sos_cost(std::int64_t d) {
  if (d < 1) throw std::domain_error("sos_cost: D must be >= 1");
  int bits = 0;
  while ((std::int64_t(1) << bits) < d) ++bits;  // ceil(log2 d), 0 for d = 1
  return static_cast<double>(d) * (2.0 * bits + 3.0);
}

double qpe_cost(double lambda_df, double delta, double prep_sel) {
  if (!(delta > 0.0)) throw std::domain_error("qpe_cost: Delta must be > 0");
  if (lambda_df < 0.0) throw std::domain_error("qpe_cost: negative lambda_DF");
  if (prep_sel < 0.0) throw std::domain_error("qpe_cost: negative prep_sel");
  return lambda_df / delta * prep_sel;
}

double poly_order_bound(double t, int q) {
  if (!(t > 0.0)) throw std::domain_error("poly_order_bound: t must be > 0");
  if (q < 1) throw std::domain_error("poly_order_bound: q must be >= 1");
  const double log_bound =
      std::log(4.0) + q * (std::log(t) - std::numbers::ln2) - std::lgamma(double(q) + 1.0);
  return std::exp(log_bound);
}

int poly_order(double t, double epsilon) {
  if (!(t > 0.0)) throw std::domain_error("poly_order: t must be > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("poly_order: epsilon in (0,1)");
  const double log_eps = std::log(epsilon);
  for (int q = 1;; ++q) {
    const double log_bound =
        std::log(4.0) + q * (std::log(t) - std::numbers::ln2) - std::lgamma(double(q) + 1.0);
    if (log_bound <= log_eps) return q;
    if (q > 1000000) throw std::runtime_error("poly_order: no convergence");
  }
}

double evolution_cost(double t, double epsilon, double lambda_df_total, double prep_sel_he,
                      double c_sos_0, double c_sos_j) {
  if (lambda_df_total < 0.0 || prep_sel_he < 0.0 || c_sos_0 < 0.0 || c_sos_j < 0.0)
    throw std::domain_error("evolution_cost: negative input");
  const int q = poly_order(t, epsilon);
  return q * lambda_df_total * (prep_sel_he + 2.0 * c_sos_0 + 2.0 * c_sos_j);
}

double prep_sel_model(double c, double n, double xi) {
  if (c < 0.0 || n < 0.0 || xi < 0.0) throw std::domain_error("prep_sel_model: negative input");
  return c * n * std::sqrt(xi);
}

CostReport excitation_route_cost(const CostModel& model) {
  const std::string bad = validate_cost_model(model);
  if (!bad.empty()) throw std::invalid_argument("excitation_route_cost: " + bad);
  if (model.w == model.w_j0)
    throw std::domain_error("excitation_route_cost: resonant (w = w_j0), time undefined");

  CostReport report;
  if (model.mu_j0 == 0.0 || model.lambda == 0.0) {
    report.unbounded = true;
    report.reason = model.mu_j0 == 0.0 ? "mu_j0 = 0: transition dark, repetitions diverge"
                                       : "lambda = 0: no coupling, repetitions diverge";
    report.repetitions = kInf;
    report.total = kInf;
    return report;
  }

  report.repetitions = repetitions_to_success(model, model.mu_j0);
  report.ground_prep =
      (sos_cost(model.d0) + qpe_cost(model.lambda_df_he, model.delta0, model.prep_sel_he)) /
      (model.a * model.a);
  const double t = std::numbers::pi / std::abs(model.w_j0 - model.w);
  const double lambda_df_total = model.lambda_df_he + 4.0 * model.lambda + model.w / 2.0;
  report.evolution = evolution_cost(t, model.epsilon, lambda_df_total, model.prep_sel_he,
                                    sos_cost(model.d0), sos_cost(model.dj));
  report.projection = qpe_cost(model.lambda_df_he, model.deltaj, model.prep_sel_he);
  report.total =
      report.repetitions * (report.ground_prep + report.evolution + report.projection);

  report.breakdown = {
      {"repetitions", report.repetitions},
      {"ground_prep", report.ground_prep},
      {"evolution", report.evolution},
      {"projection", report.projection},
      {"evolution_poly_order", double(poly_order(t, model.epsilon))},
      {"lambda_df_total", lambda_df_total},
      {"evolution_time", t},
      {"total", report.total},
  };
  return report;
}

CostReport direct_route_cost(const CostModel& model) {
  const std::string bad = validate_cost_model(model);
  if (!bad.empty()) throw std::invalid_argument("direct_route_cost: " + bad);

  CostReport report;
  report.repetitions = 1.0 / (model.b * model.b);
  report.ground_prep = sos_cost(model.dj);  // the psi_j load is the "prep" slot here
  report.projection = qpe_cost(model.lambda_df_he, model.deltaj, model.prep_sel_he);
  report.total = report.repetitions * (report.ground_prep + report.projection);
  report.breakdown = {
      {"repetitions", report.repetitions},
      {"state_prep", report.ground_prep},
      {"projection", report.projection},
      {"total", report.total},
  };
  return report;
}

RouteComparison compare_routes(const CostModel& model) {
  RouteComparison cmp;
  cmp.excitation = excitation_route_cost(model);
  cmp.direct = direct_route_cost(model);
  cmp.ratio = cmp.excitation.total / cmp.direct.total;

  // The excitation total is strictly decreasing in mu_j0 (only repetitions
  // depend on it), so a sign change brackets a unique breakeven.
  const double per_attempt = excitation_per_attempt(model);
  auto excitation_total = [&](double mu) { return repetitions_to_success(model, mu) * per_attempt; };

  double lo = 1e-12, hi = 1.0;
  while (excitation_total(hi) > cmp.direct.total && hi < 1e12) hi *= 2.0;
  if (excitation_total(hi) <= cmp.direct.total && excitation_total(lo) >= cmp.direct.total) {
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (excitation_total(mid) > cmp.direct.total)
        lo = mid;
      else
        hi = mid;
    }
    cmp.breakeven_mu_j0 = 0.5 * (lo + hi);
    cmp.breakeven_found = true;
  }

  // The reflection-coupling heuristic: at mu_j0 = a*b with lambda at its
  // convergence limit w_j0 - w, excitation must not win.
  if (model.w_j0 > model.w && model.m_denominator >= 4.0) {
    CostModel heuristic = model;
    heuristic.mu_j0 = model.a * model.b;
    heuristic.lambda = model.w_j0 - model.w;
    cmp.no_advantage_at_reflection =
        excitation_route_cost(heuristic).total >= direct_route_cost(heuristic).total;
  }
  return cmp;
}

}  // namespace exciteprep
