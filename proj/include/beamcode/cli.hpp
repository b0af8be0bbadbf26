#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace beamcode::cli {

/// Parameters for one experiment run. Defaults reproduce the reference
/// numerical setup: T=32, Ng=Na=1024, 10^4 trials, SNR from -10 to 10 dB.
struct ExperimentConfig {
  std::string experiment;  // fig1-curves, fig2-rm-pruning, fig4-isotropic-pe,
                           // fig5-cbs-pe, fig6-beampattern, bounds-report
  int t_samples = 32;
  int n_grid = 1024;
  int n_antennas = 1024;
  int rm_m = 5;
  int rm_r = 2;
  std::vector<int> filter_lengths{1, 2, 3};
  std::vector<double> snr_db;  // empty -> -10..10 in 1 dB steps
  int trials = 10000;
  std::uint64_t seed = 1;
  double region_lo = -1.0;
  double region_hi = 1.0;
  int workers = 0;
  std::string out;  // output path or prefix; empty -> derived from experiment
};

/// Runs one named experiment, writing its data files. Returns 0 on success
/// (including all requested verifications passing), nonzero otherwise.
int run_experiment(const ExperimentConfig& cfg);

struct BoundsReport {
  int t_samples = 0;
  int n_grid = 0;
  double bc_lower = 0.0;
  double bc_upper = 0.0;
  double measured_bc = 0.0;
  double welch = 0.0;
  double ula_bound = 0.0;
  double measured_ula = 0.0;
  bool sandwich_pass = false;
  bool ula_pass = false;
  bool crossover = false;  // Bose-Chowla lower bound exceeds the ULA bound

  bool pass() const { return sandwich_pass && ula_pass; }
};

/// Bound verification at n_grid = T^2 - 1 for prime T: the Bose-Chowla distance
/// sandwich for the Bose-Chowla code, Welch bound, and the ULA-shift bound.
BoundsReport report_bounds(int t_samples, int n_grid);

/// Command-line entry point; returns the process exit status.
int dispatch(int argc, const char* const* argv);

}  // namespace beamcode::cli
