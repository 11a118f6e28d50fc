#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exciteprep {

/// Scalar inputs for the route-cost comparison. Prep/Sel Toffoli costs for
/// the electronic Hamiltonian are imported numbers, never derived here.
struct CostModel {
  std::int64_t d0 = 1;          // Slater-determinant count for psi_0
  std::int64_t dj = 1;          // Slater-determinant count for psi_j
  double prep_sel_he = 0.0;     // Toffoli cost of 2*Prep + Sel for H_e
  double lambda_df_he = 0.0;    // electronic LCU 1-norm
  double delta0 = 0.0;          // QPE precision for the ground projection
  double deltaj = 0.0;          // QPE precision for the excited projection
  double a = 1.0;               // ground-state overlap, in (0, 1]
  double b = 1.0;               // excited-state overlap, in (0, 1]
  double mu_j0 = 0.0;           // coupling matrix element to the target
  double w = 0.0;               // ancilla splitting
  double lambda = 0.0;          // coupling strength
  double w_j0 = 0.0;            // target transition frequency
  double epsilon = 1e-3;        // evolution synthesis error, in (0, 1)
  double m_denominator = 1.0;   // normalization denominator M (>= 1)
};

/// Validates ranges; returns the first violated-field message or empty.
std::string validate_cost_model(const CostModel& model);

struct CostReport {
  double repetitions = 0.0;
  double ground_prep = 0.0;
  double evolution = 0.0;
  double projection = 0.0;
  double total = 0.0;
  bool unbounded = false;
  std::string reason;
  std::vector<std::pair<std::string, double>> breakdown;
};

/// Sum-of-Slaters load cost D (2 ceil(log2 D) + 3).
double sos_cost(std::int64_t d);

/// QPE projection cost (lambda_DF / Delta) * prep_sel.
double qpe_cost(double lambda_df, double delta, double prep_sel);

/// Smallest q >= 1 with 4 t^q / (2^q q!) <= epsilon, evaluated in log space.
int poly_order(double t, double epsilon);

/// The bound value 4 t^q / (2^q q!) itself.
double poly_order_bound(double t, int q);

/// q(t, epsilon) * lambda_df_total * (prep_sel_he + 2 c_sos_0 + 2 c_sos_j);
/// the 2 + 2 split covers U0, U0^dag, U1, U1^dag.
double evolution_cost(double t, double epsilon, double lambda_df_total, double prep_sel_he,
                      double c_sos_0, double c_sos_j);

/// Optional convenience model for 2*Prep + Sel: c * n * sqrt(xi).
double prep_sel_model(double c, double n, double xi);

/// Excitation-mediated preparation: repetitions times (ground preparation +
/// coupled evolution + projection).
CostReport excitation_route_cost(const CostModel& model);

/// Direct preparation of the excited approximation plus projection, repeated
/// 1/b^2 times.
CostReport direct_route_cost(const CostModel& model);

struct RouteComparison {
  CostReport excitation;
  CostReport direct;
  double ratio = 0.0;                    // excitation.total / direct.total
  double breakeven_mu_j0 = 0.0;          // 0 when no crossover exists
  bool breakeven_found = false;
  bool no_advantage_at_reflection = false;  // checked at mu_j0 = a*b, lambda = w_j0 - w
};

/// Evaluates both routes, the total ratio, the breakeven mu_j0 (bisection),
/// and the reflection-coupling no-advantage flag.
RouteComparison compare_routes(const CostModel& model);

}  // namespace exciteprep
