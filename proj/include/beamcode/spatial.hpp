#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace beamcode {

using cdouble = std::complex<double>;

/// Dense complex vector; used for codewords, steering vectors and measurements.
using CVec = std::vector<cdouble>;

/// Uniform spatial-frequency grid with points f_n = -1 + 2n/N_g, n = 0..N_g-1.
struct SpatialGrid {
  int n_points = 0;
  std::vector<double> points;
};

/// Builds the uniform grid. Rejects n_points < 2.
SpatialGrid make_grid(int n_points);

/// Integer sensor positions (antenna indices or beamspace shifts) in units of
/// half a wavelength. Strictly increasing, non-negative.
struct SensorSet {
  std::vector<int> positions;
  int count() const { return static_cast<int>(positions.size()); }
};

SensorSet make_sensor_set(std::vector<int> positions);

/// The uniform linear array {0, 1, ..., n-1}.
SensorSet ula(int n);

/// Single-path channel draw: unit-modulus coefficient and an on-grid DoA.
struct ChannelRealization {
  cdouble alpha{1.0, 0.0};
  int f_index = 0;  // 0-based grid index
};

ChannelRealization make_channel_realization(cdouble alpha, int f_index,
                                            const SpatialGrid& grid);

/// Array response at spatial frequency f: entry i is exp(j*pi*d_i*f).
/// Requires f in [-1, 1).
CVec steering_vector(const SensorSet& sensors, double f);

/// Distance between the spans of u and v: 1 - |u^H v|^2 / (||u||^2 ||v||^2),
/// clamped to [0, 1]. Zero vectors are rejected (their span is undefined).
double subspace_distance(const CVec& u, const CVec& v);

struct MinDistanceResult {
  double distance = 0.0;
  // 0-based indices of the achieving pair, first < second; ties resolve to the
  // lexicographically smallest pair.
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Exhaustive pairwise minimum of subspace_distance over the codewords.
MinDistanceResult min_subspace_distance(const std::vector<CVec>& codewords);

/// Same, over n codewords of length dim stored back to back.
MinDistanceResult min_subspace_distance(std::span<const cdouble> codewords,
                                        std::size_t n, std::size_t dim);

}  // namespace beamcode
