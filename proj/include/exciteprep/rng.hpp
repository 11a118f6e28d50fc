#pragma once

#include <complex>
#include <cstdint>

namespace exciteprep {

/// xoshiro256++ 1.0 (Blackman & Vigna), seeded through splitmix64.
/// Hand-rolled so that seeded streams are identical across platforms and
/// standard-library versions; byte-for-byte reproducibility of generated
/// systems is part of the CLI contract.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform double in [0, 1), 53 significant bits.
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (two uniform draws per value).
  double gaussian();
  /// Complex standard normal: independent N(0,1) real and imaginary parts.
  std::complex<double> complex_gaussian();

 private:
  std::uint64_t state_[4];
};

}  // namespace exciteprep
