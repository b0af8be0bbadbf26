#include "beamcode/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace beamcode {

SpatialGrid make_grid(int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("make_grid: n_points must be at least 2, got " +
                                std::to_string(n_points));
  }
  SpatialGrid grid;
  grid.n_points = n_points;
  grid.points.resize(n_points);
  for (int n = 0; n < n_points; ++n) {
    grid.points[n] = -1.0 + 2.0 * n / n_points;
  }
  return grid;
}

SensorSet make_sensor_set(std::vector<int> positions) {
  if (positions.empty()) {
    throw std::invalid_argument("make_sensor_set: empty position list");
  }
  if (positions.front() < 0) {
    throw std::invalid_argument("make_sensor_set: positions must be non-negative");
  }
  for (std::size_t i = 1; i < positions.size(); ++i) {
    if (positions[i] <= positions[i - 1]) {
      throw std::invalid_argument("make_sensor_set: positions must be strictly increasing");
    }
  }
  return SensorSet{std::move(positions)};
}

SensorSet ula(int n) {
  if (n < 1) throw std::invalid_argument("ula: need at least one sensor");
  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i;
  return SensorSet{std::move(positions)};
}

ChannelRealization make_channel_realization(cdouble alpha, int f_index,
                                            const SpatialGrid& grid) {
  if (std::abs(std::abs(alpha) - 1.0) > 1e-9) {
    throw std::invalid_argument("make_channel_realization: |alpha| must be 1");
  }
  if (f_index < 0 || f_index >= grid.n_points) {
    throw std::invalid_argument("make_channel_realization: f_index outside grid");
  }
  return ChannelRealization{alpha, f_index};
}

CVec steering_vector(const SensorSet& sensors, double f) {
  if (!(f >= -1.0 && f < 1.0)) {
    throw std::invalid_argument("steering_vector: f must lie in [-1, 1)");
  }
  CVec a(sensors.positions.size());
  constexpr double pi = 3.141592653589793238462643383279502884;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = std::polar(1.0, pi * sensors.positions[i] * f);
  }
  return a;
}

namespace {

double squared_norm(const cdouble* v, std::size_t len) {
  double s = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    s += v[t].real() * v[t].real() + v[t].imag() * v[t].imag();
  }
  return s;
}

// |u^H v|^2 without forming the intermediate complex value.
double squared_inner(const cdouble* u, const cdouble* v, std::size_t len) {
  double ar = 0.0, ai = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    const double ur = u[t].real(), ui = u[t].imag();
    const double vr = v[t].real(), vi = v[t].imag();
    ar += ur * vr + ui * vi;
    ai += ur * vi - ui * vr;
  }
  return ar * ar + ai * ai;
}

}  // namespace

double subspace_distance(const CVec& u, const CVec& v) {
  if (u.empty() || u.size() != v.size()) {
    throw std::invalid_argument("subspace_distance: vectors must be non-empty and equal length");
  }
  const double nu = squared_norm(u.data(), u.size());
  const double nv = squared_norm(v.data(), v.size());
  if (!(nu > 0.0) || !(nv > 0.0) || !std::isfinite(nu) || !std::isfinite(nv)) {
    throw std::invalid_argument("subspace_distance: zero or non-finite input vector");
  }
  const double d = 1.0 - squared_inner(u.data(), v.data(), u.size()) / (nu * nv);
  return std::clamp(d, 0.0, 1.0);
}

MinDistanceResult min_subspace_distance(std::span<const cdouble> codewords,
                                        std::size_t n, std::size_t dim) {
  if (n < 2) {
    throw std::invalid_argument("min_subspace_distance: need at least 2 codewords");
  }
  if (dim < 1 || codewords.size() != n * dim) {
    throw std::invalid_argument("min_subspace_distance: storage does not match n*dim");
  }
  std::vector<double> norms(n);
  for (std::size_t k = 0; k < n; ++k) {
    norms[k] = squared_norm(codewords.data() + k * dim, dim);
    if (!(norms[k] > 0.0) || !std::isfinite(norms[k])) {
      throw std::invalid_argument("min_subspace_distance: zero or non-finite codeword");
    }
  }
  // Track the maximum normalized coherence; strict '>' keeps the first
  // (lexicographically smallest) achieving pair.
  double best = -1.0;
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const cdouble* u = codewords.data() + i * dim;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double coh = squared_inner(u, codewords.data() + j * dim, dim) /
                         (norms[i] * norms[j]);
      if (coh > best) {
        best = coh;
        bi = i;
        bj = j;
      }
    }
  }
  return MinDistanceResult{std::clamp(1.0 - best, 0.0, 1.0), bi, bj};
}

MinDistanceResult min_subspace_distance(const std::vector<CVec>& codewords) {
  if (codewords.size() < 2) {
    throw std::invalid_argument("min_subspace_distance: need at least 2 codewords");
  }
  const std::size_t dim = codewords.front().size();
  std::vector<cdouble> flat;
  flat.reserve(codewords.size() * dim);
  for (const CVec& c : codewords) {
    if (c.size() != dim) {
      throw std::invalid_argument("min_subspace_distance: codeword lengths differ");
    }
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return min_subspace_distance(std::span<const cdouble>(flat), codewords.size(), dim);
}

}  // namespace beamcode
