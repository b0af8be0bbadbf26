#pragma once

#include <complex>
#include <cstdint>

namespace beamcode {

/// Deterministic xoshiro256++ stream with splitmix64 seeding. Sequences are
/// identical across platforms and runs, which the reproducibility contract of
/// the Monte Carlo harness relies on.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Stream deterministically derived from (seed, a, b), e.g.
  /// (master seed, SNR index, trial index).
  static RngStream substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit();

  /// Uniform integer in [0, n). n must be positive. Uses a modulo draw; the
  /// bias is O(n / 2^64) and irrelevant at the trial counts used here.
  std::uint64_t next_below(std::uint64_t n);

  /// Circularly-symmetric complex Gaussian CN(0, sigma^2): real and imaginary
  /// parts each N(0, sigma^2 / 2). One Box-Muller pair per call.
  std::complex<double> next_complex_gaussian(double sigma);

  /// Standard normal draw (consumes one Box-Muller pair, returns both).
  void next_gaussian_pair(double& z0, double& z1);

 private:
  std::uint64_t state_[4];
};

}  // namespace beamcode
