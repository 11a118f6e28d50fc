#include "exciteprep/perturbation.hpp"

#include <cmath>
#include <stdexcept>

namespace exciteprep {

namespace {

constexpr Complex kMinusI(0.0, -1.0);

// (exp(-i freq t) - 1) / freq as an ExpPoly, with the secular limit -i t
// when |freq| <= tol.
ExpPoly phase_fraction(double freq, double tol) {
  if (std::abs(freq) <= tol) return ExpPoly::term(kMinusI, 1, 0.0);
  ExpPoly p = ExpPoly::term(1.0 / freq, 0, freq);
  p += ExpPoly::term(-1.0 / freq, 0, 0.0);
  return p;
}

}  // namespace

PerturbationTable::PerturbationTable(const ElectronicSystem& sys, double w, int order,
                                     CoupledIndex init)
    : order_(order), levels_(sys.levels()), init_(init), freq_tol_(degeneracy_tolerance(sys, w)) {
  if (order < 0) throw std::invalid_argument("PerturbationTable: order must be >= 0");
  if (order > kMaxOrder)
    throw std::invalid_argument("PerturbationTable: order exceeds supported cap");
  if (init.alpha != 0 && init.alpha != 1)
    throw std::domain_error("PerturbationTable: initial alpha not in {0,1}");
  if (init.k < 0 || init.k >= levels_)
    throw std::domain_error("PerturbationTable: initial level out of range");

  coeffs_.assign(static_cast<std::size_t>(order + 1) * 2 * levels_, ExpPoly::zero());
  auto slot = [this](int m, int alpha, int j) -> ExpPoly& {
    return coeffs_[(static_cast<std::size_t>(m) * 2 + alpha) * levels_ + j];
  };

  slot(0, init.alpha, init.k) = ExpPoly::constant(1.0);

  for (int m = 1; m <= order; ++m) {
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int j = 0; j < levels_; ++j) {
        ExpPoly rhs;
        for (int k = 0; k < levels_; ++k) {
          const ExpPoly& src = slot(m - 1, 1 - alpha, k);
          if (src.is_zero()) continue;
          const Complex mu = sys.coupling(j, k);
          if (mu == Complex(0.0)) continue;
          const double shift = coupled_energy(sys, w, {1 - alpha, k}) -
                               coupled_energy(sys, w, {alpha, j});
          ExpPoly contribution = src.phase_shifted(shift, freq_tol_);
          contribution *= kMinusI * mu;
          rhs += contribution;
        }
        rhs.canonicalize(freq_tol_);
        slot(m, alpha, j) = rhs.integrated_from_zero(freq_tol_);
      }
    }
  }
}

const ExpPoly& PerturbationTable::coeff(int m, int alpha, int j) const {
  if (m < 0 || m > order_) throw std::domain_error("PerturbationTable: order out of range");
  if (alpha != 0 && alpha != 1) throw std::domain_error("PerturbationTable: alpha not in {0,1}");
  if (j < 0 || j >= levels_) throw std::domain_error("PerturbationTable: level out of range");
  return coeffs_[(static_cast<std::size_t>(m) * 2 + alpha) * levels_ + j];
}

PerturbationTable perturbation_table(const ElectronicSystem& sys, double w, int order,
                                     CoupledIndex init) {
  return PerturbationTable(sys, w, order, init);
}

Complex recurrence_rhs(const PerturbationTable& table, const ElectronicSystem& sys, double w,
                       int m, int alpha, int j, double t) {
  if (m < 1) throw std::domain_error("recurrence_rhs: m must be >= 1");
  Complex sum = 0.0;
  for (int k = 0; k < sys.levels(); ++k) {
    const double shift =
        coupled_energy(sys, w, {1 - alpha, k}) - coupled_energy(sys, w, {alpha, j});
    sum += std::polar(1.0, -shift * t) * table.coeff(m - 1, 1 - alpha, k).eval(t) *
           sys.coupling(j, k);
  }
  return kMinusI * sum;
}

ExpPoly closed_form_c1(const ElectronicSystem& sys, double w, int alpha, int j) {
  if (alpha != 1) return ExpPoly::zero();
  const double tol = degeneracy_tolerance(sys, w);
  const double freq = coupled_energy(sys, w, {1 - alpha, 0}) - coupled_energy(sys, w, {alpha, j});
  ExpPoly p = phase_fraction(freq, tol);
  p *= sys.coupling(j, 0);
  p.canonicalize(tol);
  return p;
}

ExpPoly closed_form_c2(const ElectronicSystem& sys, double w, int alpha, int j) {
  if (alpha != 0) return ExpPoly::zero();
  const double tol = degeneracy_tolerance(sys, w);
  const double freq1 = coupled_energy(sys, w, {0, 0}) - coupled_energy(sys, w, {0, j});
  ExpPoly total;
  for (int k = 0; k < sys.levels(); ++k) {
    const Complex weight = sys.coupling(j, k) * sys.coupling(k, 0);
    if (weight == Complex(0.0)) continue;
    const double denom = coupled_energy(sys, w, {0, 0}) - coupled_energy(sys, w, {1, k});
    if (std::abs(denom) <= tol)
      throw std::domain_error("closed_form_c2: resonant intermediate state");
    const double freq2 = coupled_energy(sys, w, {1, k}) - coupled_energy(sys, w, {0, j});
    ExpPoly bracket = phase_fraction(freq1, tol);
    ExpPoly second = phase_fraction(freq2, tol);
    second *= -1.0;
    bracket += second;
    bracket *= weight / denom;
    total += bracket;
  }
  total.canonicalize(tol);
  return total;
}

AmplitudeRecord truncated_amplitudes(const PerturbationTable& table, double lambda, double t,
                                     int max_order) {
  if (lambda < 0.0) throw std::domain_error("truncated_amplitudes: lambda must be >= 0");
  const int top = max_order < 0 ? table.order() : max_order;
  if (top > table.order())
    throw std::domain_error("truncated_amplitudes: order exceeds table order");
  const int n = table.levels();

  AmplitudeRecord record;
  record.levels = n;
  record.c = Eigen::VectorXcd::Zero(2 * n);
  record.probability.resize(2 * n);

  double lambda_pow = 1.0;
  for (int m = 0; m <= top; ++m) {
    for (int alpha = 0; alpha < 2; ++alpha)
      for (int j = 0; j < n; ++j)
        record.c[flatten({alpha, j}, n)] += lambda_pow * table.coeff(m, alpha, j).eval(t);
    lambda_pow *= lambda;
  }
  for (int pos = 0; pos < 2 * n; ++pos) record.probability[pos] = std::norm(record.c[pos]);
  return record;
}

namespace {

// sin((w_{j,0} - w) t / 2) / (w_{j,0} - w), continued to t/2 at resonance.
double sine_factor(const ElectronicSystem& sys, double w, int j, double t, double tol) {
  const double detuning = gap(sys, j, 0) - w;
  if (std::abs(detuning) <= tol) return t / 2.0;
  return std::sin(detuning * t / 2.0) / detuning;
}

}  // namespace

double first_order_normalization(const ElectronicSystem& sys, double w, double lambda, double t) {
  const double tol = degeneracy_tolerance(sys, w);
  double z = 1.0;
  for (int j = 0; j < sys.levels(); ++j) {
    const double s = sine_factor(sys, w, j, t, tol);
    z += 4.0 * lambda * lambda * std::norm(sys.coupling(0, j)) * s * s;
  }
  return z;
}

AmplitudeRecord first_order_state(const ElectronicSystem& sys, double w, double lambda,
                                  double t) {
  if (lambda < 0.0) throw std::domain_error("first_order_state: lambda must be >= 0");
  const int n = sys.levels();
  const double tol = degeneracy_tolerance(sys, w);
  const double inv_sqrt_z = 1.0 / std::sqrt(first_order_normalization(sys, w, lambda, t));

  AmplitudeRecord record;
  record.levels = n;
  record.c = Eigen::VectorXcd::Zero(2 * n);
  record.probability = Eigen::VectorXd::Zero(2 * n);

  record.c[flatten({0, 0}, n)] = inv_sqrt_z;
  for (int j = 0; j < n; ++j) {
    const double s = sine_factor(sys, w, j, t, tol);
    const Complex phase = std::polar(1.0, (sys.energy(j) + sys.energy(0)) * t / 2.0);
    record.c[flatten({1, j}, n)] =
        Complex(0.0, -2.0) * lambda * sys.coupling(0, j) * phase * s * inv_sqrt_z;
  }
  for (int pos = 0; pos < 2 * n; ++pos) record.probability[pos] = std::norm(record.c[pos]);
  return record;
}

}  // namespace exciteprep
