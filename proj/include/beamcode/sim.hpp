#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "beamcode/rng.hpp"
#include "beamcode/subcode.hpp"

namespace beamcode {

/// Monte Carlo sweep parameters. Ground truths are drawn uniformly from the
/// grid points inside [region_lo, region_hi] (inclusive); the default region
/// covers the whole grid. snr_db may contain +infinity for noiseless runs.
struct SimConfig {
  std::vector<double> snr_db;
  int n_trials = 10000;
  std::uint64_t seed = 1;
  double region_lo = -1.0;
  double region_hi = 1.0;
  int n_workers = 0;  // 0 -> hardware concurrency
};

struct Measurement {
  CVec y;
  ChannelRealization truth;
};

struct PePoint {
  double snr_db = 0.0;
  double empirical_pe = 0.0;
  double bound_pe = 0.0;
  int n_trials = 0;
  int n_errors = 0;
};

struct PeCurve {
  std::vector<PePoint> points;
};

/// sigma = 10^(-snr/20); SNR := -20 log10(sigma).
double snr_to_sigma(double snr_db);

/// Grid indices whose frequency lies in [lo, hi] inclusive.
std::vector<int> region_indices(const SpatialGrid& grid, double lo, double hi);

/// y = alpha * W a_U(f_k) + z with z ~ CN(0, sigma^2 I) per entry. sigma = 0
/// bypasses noise generation entirely.
Measurement synthesize(const Beamformer& w, const SpatialGrid& grid,
                       const ChannelRealization& truth, double sigma,
                       RngStream& rng);

/// argmax_n |y^H b_n|^2, ties broken towards the smallest index. Does not
/// depend on the channel coefficient.
int ml_decode(const CVec& y, const SubspaceCode& code);

/// Probability-of-error bound N_g exp(-(|alpha|^2 / 4 sigma^2) * gain *
/// (1 - sqrt(1 - d_min))^2), clipped to 1 for reporting.
double ml_error_bound(double gain, double alpha_mag, double sigma, double d_min,
                      int n_grid);

/// Convolutional-beamspace specialization with gain |B(f_k; w)|^2 * T. With
/// use_bc_lower_bound the Bose-Chowla distance lower bound 1 - 2/T replaces
/// the measured d_min.
double cbs_error_bound(const Filter& filter, double f_k, double shifts_dmin,
                           double alpha_mag, double sigma, int n_grid, int T,
                           bool use_bc_lower_bound = false);

/// Per SNR point: n_trials independent draws of (f_k, alpha, noise), ML
/// decoding, and the mean of per-trial clipped union bounds. Results are
/// bit-identical for any worker count: trial t of SNR index s always uses the
/// stream derived from (seed, s, t) and reductions run in trial order.
PeCurve monte_carlo(const SimConfig& cfg, const SpatialGrid& grid,
                    const SubspaceCode& code);

/// True iff every noiseless codeword decodes back to its own index.
bool noiseless_exhaustive_recovery(const SubspaceCode& code);

/// Whitespace table with header "SNR Pe Peub", 10 significant digits.
void write_pe_curve(std::ostream& os, const PeCurve& curve);

}  // namespace beamcode
