#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace beamcode {

/// Binary codebook: n_codewords codewords of uniform length, stored
/// column-major (bits[n * length + t] is symbol t of codeword n).
///
/// When `linear` is set the columns enumerate a full linear code in message
/// order: column n is the codeword of message integer n, and the XOR of
/// columns i and j equals column i^j.
struct BinaryCodebook {
  int length = 0;       // T
  int n_codewords = 0;  // N_g
  std::vector<std::uint8_t> bits;
  bool linear = false;
  int rm_m = -1;  // Reed-Muller parameters when applicable
  int rm_r = -1;

  std::uint8_t bit(int n, int t) const {
    return bits[std::size_t(n) * length + t];
  }
};

/// BPSK image of a binary codebook: entries in {-1, +1}, column-major.
struct BpskCodebook {
  int length = 0;
  int n_codewords = 0;
  std::vector<double> symbols;

  const double* column(int n) const {
    return symbols.data() + std::size_t(n) * length;
  }
};

struct HammingStats {
  int d_min = 0;
  int d_max = 0;
  double rho = 0.0;  // d_min / d_max
};

/// Reed-Muller code RM(m, r): all 2^k codewords of length T = 2^m, where
/// k = sum_{i<=r} C(m, i).
///
/// Ordering contract (pruning semantics depend on it):
///  - generator rows are monomial evaluations, degree ascending and
///    lexicographic by variable subset within a degree, so row 0 is the
///    all-ones (degree-0) row;
///  - evaluation point j in 0..2^m-1 assigns bit i of j to variable x_i;
///  - column n is the codeword of message integer n, with row 0 driven by the
///    most significant message bit. Messages below 2^(k-1) therefore never
///    include the all-ones row, which keeps any prefix of at most half the
///    codebook free of complementary codeword pairs.
BinaryCodebook reed_muller(int m, int r);

/// Minimum/maximum pairwise Hamming distance. Linear codebooks use the
/// weight enumeration of nonzero codewords; arbitrary codebooks fall back to
/// exhaustive pairwise distances.
HammingStats hamming_stats(const BinaryCodebook& code);

/// Elementwise 0 -> +1, 1 -> -1.
BpskCodebook to_bpsk(const BinaryCodebook& code);

/// Inner product of two BPSK words, checked against T - 2*d_Ham(u, v).
int bpsk_inner_product(std::span<const double> u, std::span<const double> v);

/// Minimum subspace distance of the beamspace code induced by a BPSK codebook
/// with the given Hamming statistics:
///   1 - (max{1 - 2*d_min/T, 2*d_max/T - 1})^2.
double min_subspace_from_hamming(const HammingStats& stats, int T);

/// Distances at which the two branches of the closed form meet for a fixed
/// ratio rho = d_min/d_max. balanced_distance is T/(1+rho); it equals the
/// optimal maximum Hamming distance (the optimal minimum distance is
/// T - balanced_distance, i.e. T*rho/(1+rho)).
struct HammingTarget {
  double balanced_distance;   // T / (1 + rho)
  double optimal_d_min;       // T * rho / (1 + rho)
  double min_subspace;        // 1 - ((1 - rho) / (1 + rho))^2
};

HammingTarget optimal_hamming_target(double rho, int T);

/// First n columns (messages 0..n-1 under the reed_muller ordering).
BinaryCodebook prune_deterministic(const BinaryCodebook& code, int n);

struct PruneTrialStats {
  std::vector<double> dmin_values;  // subspace d_min per trial
  double median = 0.0;              // lower-middle order statistic
};

/// For each trial, samples n distinct columns uniformly and records the
/// subspace d_min of the pruned codebook via the closed form; reproducible
/// from the seed with per-trial substreams.
PruneTrialStats prune_random(const BinaryCodebook& code, int n, int trials,
                             std::uint64_t seed);

}  // namespace beamcode
