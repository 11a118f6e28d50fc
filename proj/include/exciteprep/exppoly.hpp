#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace exciteprep {

/// One term coeff * t^power * exp(-i * freq * t).
struct ExpPolyTerm {
  std::complex<double> coeff;
  int power = 0;
  double freq = 0.0;
};

/// Exact symbolic function of time: a finite sum of exponential-polynomial
/// terms. Closed under the three operations the perturbative recurrence
/// needs: multiplication by a pure phase, scaling, and integration from zero.
///
/// Canonical form (after canonicalize): terms sorted by (freq, power), no two
/// terms share the same (power, freq bucket), frequencies within the merge
/// tolerance of zero are snapped to exactly zero, and coefficients smaller
/// than 1e-15 of the largest are pruned.
class ExpPoly {
 public:
  ExpPoly() = default;

  static ExpPoly zero() { return {}; }
  static ExpPoly constant(std::complex<double> c);
  /// Single term c * t^power * exp(-i freq t).
  static ExpPoly term(std::complex<double> coeff, int power, double freq);

  std::complex<double> eval(double t) const;

  /// Multiplication by exp(-i * delta * t): every frequency shifts by delta.
  ExpPoly phase_shifted(double delta, double freq_tol) const;

  /// The antiderivative F with F(0) = 0 and F' = *this. Terms in the zero
  /// frequency bucket integrate by the power rule (secular terms); others by
  /// repeated integration by parts, plus the constant enforcing F(0) = 0.
  ExpPoly integrated_from_zero(double freq_tol) const;

  /// Exact termwise derivative.
  ExpPoly derivative() const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator*=(std::complex<double> s);

  /// Merge frequency buckets and equal powers, snap near-zero frequencies,
  /// prune negligible coefficients.
  void canonicalize(double freq_tol);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<ExpPolyTerm>& terms() const { return terms_; }

  /// Hard cap on term growth; exceeding it raises std::runtime_error.
  static constexpr std::size_t kMaxTerms = 1'000'000;

 private:
  void check_cap() const;

  std::vector<ExpPolyTerm> terms_;
};

}  // namespace exciteprep
