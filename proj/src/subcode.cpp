#include "beamcode/subcode.hpp"

#include "beamcode/golomb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beamcode {

namespace {

SubspaceCode finalize(std::vector<cdouble> raw, int n, int dim, std::string provenance) {
  SubspaceCode code;
  code.n_codewords = n;
  code.dim = dim;
  code.codewords = std::move(raw);
  code.gains.resize(n);
  code.provenance = std::move(provenance);
  for (int k = 0; k < n; ++k) {
    cdouble* c = code.codewords.data() + std::size_t(k) * dim;
    double gain = 0.0;
    for (int t = 0; t < dim; ++t) gain += std::norm(c[t]);
    if (gain == 0.0) {
      throw std::invalid_argument("build_code: codeword " + std::to_string(k) +
                                  " is zero: that grid point is unidentifiable");
    }
    code.gains[k] = gain;
    const double inv = 1.0 / std::sqrt(gain);
    for (int t = 0; t < dim; ++t) c[t] *= inv;
  }
  code.min_distance = min_subspace_distance(
      std::span<const cdouble>(code.codewords), std::size_t(n), std::size_t(dim));
  return code;
}

}  // namespace

SubspaceCode build_code(const Beamformer& w, const SpatialGrid& grid) {
  std::vector<cdouble> raw(std::size_t(grid.n_points) * w.n_rows);
  for (int n = 0; n < grid.n_points; ++n) {
    const CVec y = apply_to_ula_steering(w, grid.points[n]);
    std::copy(y.begin(), y.end(), raw.begin() + std::size_t(n) * w.n_rows);
  }
  return finalize(std::move(raw), grid.n_points, w.n_rows,
                  w.provenance + " / grid " + std::to_string(grid.n_points));
}

SubspaceCode antenna_space_code(const SensorSet& sensors, const SpatialGrid& grid) {
  const int dim = sensors.count();
  std::vector<cdouble> raw(std::size_t(grid.n_points) * dim);
  for (int n = 0; n < grid.n_points; ++n) {
    const CVec a = steering_vector(sensors, grid.points[n]);
    std::copy(a.begin(), a.end(), raw.begin() + std::size_t(n) * dim);
  }
  return finalize(std::move(raw), grid.n_points, dim,
                  "antenna space T=" + std::to_string(dim) + " / grid " +
                      std::to_string(grid.n_points));
}

MinDistanceResult code_min_distance(const SubspaceCode& code) {
  return code.min_distance;
}

double welch_upper_bound(int T, int n_codewords) {
  if (n_codewords <= T) {
    throw std::invalid_argument("welch_upper_bound: vacuous for n_codewords <= T");
  }
  return 1.0 - double(n_codewords - T) / (double(T) * (n_codewords - 1));
}

double bose_chowla_gap_factor(int T) {
  const double t = T;
  return (1.0 - 1.0 / t - 1.0 / (t * t)) / (1.0 - 2.0 / (t * t));
}

DistanceBounds bose_chowla_distance_bounds(int T, int n_grid) {
  if (!is_prime(T)) {
    throw std::invalid_argument("bose_chowla_distance_bounds: T must be prime");
  }
  if (n_grid != T * T - 1) {
    throw std::invalid_argument("bose_chowla_distance_bounds: regime requires n_grid = T^2 - 1");
  }
  return DistanceBounds{1.0 - 2.0 / T, 1.0 - bose_chowla_gap_factor(T) / T, BoundSource::BoseChowla};
}

double ula_shift_distance_bound() {
  constexpr double pi = 3.141592653589793238462643383279502884;
  return 1.0 - 4.0 / (pi * pi);
}

FilterInvarianceReport verify_filter_invariance(const SensorSet& shifts,
                                                const std::vector<Filter>& filters,
                                                const SpatialGrid& grid,
                                                int n_antennas) {
  FilterInvarianceReport report;
  report.tolerance = 1e-10;
  report.antenna_space_dmin = antenna_space_code(shifts, grid).min_distance.distance;
  for (const Filter& filter : filters) {
    const Beamformer w = conv_beamformer(filter, shifts, n_antennas);
    const double d = build_code(w, grid).min_distance.distance;
    report.filter_dmin.push_back(d);
    report.max_spread =
        std::max(report.max_spread, std::abs(d - report.antenna_space_dmin));
  }
  report.invariant = report.max_spread <= report.tolerance;
  return report;
}

}  // namespace beamcode
