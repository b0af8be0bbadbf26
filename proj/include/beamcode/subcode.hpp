#pragma once

#include <string>
#include <vector>

#include "beamcode/beamform.hpp"

namespace beamcode {

/// Beamspace subspace code: one unit-norm codeword per grid point, the raw
/// beamforming gains ||W a_U(f_n)||^2 they were normalized from, and the
/// cached minimum pairwise subspace distance.
struct SubspaceCode {
  int n_codewords = 0;  // N_g
  int dim = 0;          // T
  std::vector<cdouble> codewords;  // codeword-major, unit norm
  std::vector<double> gains;       // ||W a_U(f_n)||^2
  MinDistanceResult min_distance;
  std::string provenance;

  const cdouble* codeword(int n) const {
    return codewords.data() + std::size_t(n) * dim;
  }
};

/// Normalized W a_U(f_n) over every grid point. An exactly zero codeword is
/// rejected (the grid point would be unidentifiable).
SubspaceCode build_code(const Beamformer& w, const SpatialGrid& grid);

/// The antenna-space code C(I, S): normalized steering vectors of the sensor
/// set itself.
SubspaceCode antenna_space_code(const SensorSet& sensors, const SpatialGrid& grid);

MinDistanceResult code_min_distance(const SubspaceCode& code);

/// Upper bound on minimum subspace distance induced by the Welch bound on the
/// coherence of n_codewords unit vectors in T dimensions:
///   1 - (N_g - T) / (T (N_g - 1)).
/// Requires n_codewords > T (the bound is vacuous otherwise).
double welch_upper_bound(int T, int n_codewords);

enum class BoundSource { BoseChowla, UlaShift, Welch };

struct DistanceBounds {
  double lower = 0.0;
  double upper = 1.0;
  BoundSource source = BoundSource::BoseChowla;
};

/// c(T) = (1 - 1/T - 1/T^2) / (1 - 2/T^2), in (0, 1) for all primes T >= 2.
double bose_chowla_gap_factor(int T);

/// Sandwich for the Bose-Chowla antenna-selection code in the regime
/// n_grid = T^2 - 1 with T prime: [1 - 2/T, 1 - c(T)/T].
DistanceBounds bose_chowla_distance_bounds(int T, int n_grid);

/// Upper bound 1 - 4/pi^2 on the minimum distance of ULA-shift codes.
double ula_shift_distance_bound();

struct FilterInvarianceReport {
  std::vector<double> filter_dmin;  // one per filter
  double antenna_space_dmin = 0.0;
  double max_spread = 0.0;  // max |filter_dmin - antenna_space_dmin|
  double tolerance = 0.0;
  bool invariant = false;
};

/// Builds the convolutional-beamspace code for each filter plus the pure
/// antenna-space code on the shifts, and checks that every minimum distance
/// agrees to 1e-10. Each filter's response must be nonzero at every grid
/// point; an exact null there leaves the span undefined.
FilterInvarianceReport verify_filter_invariance(const SensorSet& shifts,
                                                const std::vector<Filter>& filters,
                                                const SpatialGrid& grid,
                                                int n_antennas);

}  // namespace beamcode
