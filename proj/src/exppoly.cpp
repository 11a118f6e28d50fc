#include "exciteprep/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exciteprep {

using Complex = std::complex<double>;

ExpPoly ExpPoly::constant(Complex c) { return term(c, 0, 0.0); }

ExpPoly ExpPoly::term(Complex coeff, int power, double freq) {
  if (power < 0) throw std::invalid_argument("ExpPoly: negative power");
  ExpPoly p;
  if (coeff != Complex(0.0)) p.terms_.push_back({coeff, power, freq});
  return p;
}

Complex ExpPoly::eval(double t) const {
  Complex sum = 0.0;
  for (const auto& term : terms_) {
    double tn = 1.0;
    for (int i = 0; i < term.power; ++i) tn *= t;
    sum += term.coeff * tn * std::polar(1.0, -term.freq * t);
  }
  return sum;
}

ExpPoly ExpPoly::phase_shifted(double delta, double freq_tol) const {
  ExpPoly out = *this;
  for (auto& term : out.terms_) term.freq += delta;
  out.canonicalize(freq_tol);
  return out;
}

ExpPoly ExpPoly::integrated_from_zero(double freq_tol) const {
  ExpPoly in = *this;
  in.canonicalize(freq_tol);

  ExpPoly out;
  for (const auto& term : in.terms_) {
    if (term.freq == 0.0) {
      // Secular branch: integral of c * t^n is c * t^(n+1) / (n+1).
      out.terms_.push_back({term.coeff / double(term.power + 1), term.power + 1, 0.0});
      continue;
    }
    // Repeated integration by parts with a = -i*freq:
    //   int_0^t s^n e^{as} ds = e^{at} sum_k (-1)^k n!/(n-k)! t^{n-k} / a^{k+1}
    //                           - (-1)^n n! / a^{n+1}.
    const Complex a(0.0, -term.freq);
    Complex inv_a_pow = 1.0 / a;  // 1 / a^{k+1}
    double falling = 1.0;         // n! / (n-k)!
    double sign = 1.0;
    Complex boundary = 0.0;       // F(0), the k = n coefficient
    for (int k = 0; k <= term.power; ++k) {
      const Complex coeff = term.coeff * sign * falling * inv_a_pow;
      out.terms_.push_back({coeff, term.power - k, term.freq});
      if (k == term.power) boundary = coeff;
      falling *= double(term.power - k);
      inv_a_pow /= a;
      sign = -sign;
    }
    out.terms_.push_back({-boundary, 0, 0.0});
  }
  out.canonicalize(freq_tol);
  return out;
}

ExpPoly ExpPoly::derivative() const {
  ExpPoly out;
  for (const auto& term : terms_) {
    if (term.power > 0)
      out.terms_.push_back({term.coeff * double(term.power), term.power - 1, term.freq});
    if (term.freq != 0.0)
      out.terms_.push_back({term.coeff * Complex(0.0, -term.freq), term.power, term.freq});
  }
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  check_cap();
  return *this;
}

ExpPoly& ExpPoly::operator*=(Complex s) {
  if (s == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= s;
  return *this;
}

void ExpPoly::canonicalize(double freq_tol) {
  if (terms_.empty()) return;
  check_cap();

  std::sort(terms_.begin(), terms_.end(), [](const ExpPolyTerm& a, const ExpPolyTerm& b) {
    if (a.freq != b.freq) return a.freq < b.freq;
    return a.power < b.power;
  });

  // Walk frequency buckets; the first member is the representative.
  std::vector<ExpPolyTerm> merged;
  std::size_t i = 0;
  while (i < terms_.size()) {
    double rep = terms_[i].freq;
    std::size_t j = i;
    while (j < terms_.size() && std::abs(terms_[j].freq - rep) <= freq_tol) ++j;
    if (std::abs(rep) <= freq_tol) rep = 0.0;

    // Terms [i, j) sorted by power inside the bucket; fold equal powers.
    std::stable_sort(terms_.begin() + i, terms_.begin() + j,
                     [](const ExpPolyTerm& a, const ExpPolyTerm& b) { return a.power < b.power; });
    for (std::size_t k = i; k < j;) {
      Complex sum = 0.0;
      const int power = terms_[k].power;
      while (k < j && terms_[k].power == power) sum += terms_[k++].coeff;
      if (sum != Complex(0.0)) merged.push_back({sum, power, rep});
    }
    i = j;
  }

  double max_abs = 0.0;
  for (const auto& term : merged) max_abs = std::max(max_abs, std::abs(term.coeff));
  terms_.clear();
  for (const auto& term : merged)
    if (std::abs(term.coeff) >= 1e-15 * max_abs) terms_.push_back(term);
}

void ExpPoly::check_cap() const {
  if (terms_.size() > kMaxTerms)
    throw std::runtime_error(
        "ExpPoly: term cap exceeded; reduce the perturbation order or system size");
}

}  // namespace exciteprep
