#include "beamcode/beamform.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace beamcode {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kRowNormTol = 1e-9;

void validate_unit_rows(const Beamformer& w, const char* who) {
  for (int t = 0; t < w.n_rows; ++t) {
    const cdouble* row = w.row(t);
    double s = 0.0;
    for (int a = 0; a < w.n_antennas; ++a) s += std::norm(row[a]);
    if (std::abs(std::sqrt(s) - 1.0) > kRowNormTol) {
      throw std::runtime_error(std::string(who) + ": row " + std::to_string(t) +
                               " does not have unit norm");
    }
  }
}

}  // namespace

Filter make_filter(std::vector<cdouble> taps) {
  if (taps.empty()) throw std::invalid_argument("make_filter: empty taps");
  double s = 0.0;
  for (const cdouble& w : taps) s += std::norm(w);
  const double norm = std::sqrt(s);
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::invalid_argument("make_filter: taps must have unit L2 norm (got " +
                                std::to_string(norm) + ")");
  }
  for (cdouble& w : taps) w /= norm;
  return Filter{std::move(taps)};
}

Filter boxcar_filter(int length) {
  if (length < 1) throw std::invalid_argument("boxcar_filter: length must be >= 1");
  const double tap = 1.0 / std::sqrt(double(length));
  return Filter{std::vector<cdouble>(length, cdouble(tap, 0.0))};
}

Beamformer bpsk_beamformer(const BpskCodebook& codebook, const SpatialGrid& grid) {
  if (codebook.n_codewords != grid.n_points) {
    throw std::invalid_argument("bpsk_beamformer: codebook must have one column per grid point");
  }
  const int n_grid = grid.n_points;  // N_a = N_g in this construction regime
  const int T = codebook.length;

  // W[t][a] = (1/N_a) sum_n B[t][n] conj(e^{j pi a f_n}). The manifold column
  // phases are precomputed per (a, n) stripe.
  Beamformer w;
  w.n_rows = T;
  w.n_antennas = n_grid;
  w.weights.assign(std::size_t(T) * n_grid, cdouble{});
  w.kind = BeamformerKind::BpskInduced;
  w.provenance = "bpsk codebook T=" + std::to_string(T) +
                 " Ng=" + std::to_string(n_grid);

  std::vector<cdouble> conj_phase(n_grid);
  const double inv_na = 1.0 / n_grid;
  for (int a = 0; a < n_grid; ++a) {
    for (int n = 0; n < n_grid; ++n) {
      conj_phase[n] = std::polar(1.0, -kPi * a * grid.points[n]);
    }
    for (int t = 0; t < T; ++t) {
      const double* column_row = codebook.symbols.data();  // column-major
      double ar = 0.0, ai = 0.0;
      for (int n = 0; n < n_grid; ++n) {
        const double b = column_row[std::size_t(n) * T + t];
        ar += b * conj_phase[n].real();
        ai += b * conj_phase[n].imag();
      }
      w.weights[std::size_t(t) * n_grid + a] = cdouble(ar * inv_na, ai * inv_na);
    }
  }
  validate_unit_rows(w, "bpsk_beamformer");
  return w;
}

Beamformer antenna_selection_beamformer(const SensorSet& omega, int n_antennas) {
  if (omega.positions.empty()) {
    throw std::invalid_argument("antenna_selection_beamformer: empty sensor set");
  }
  if (omega.positions.back() >= n_antennas) {
    throw std::invalid_argument("antenna_selection_beamformer: position " +
                                std::to_string(omega.positions.back()) +
                                " outside aperture of " + std::to_string(n_antennas));
  }
  Beamformer w;
  w.n_rows = omega.count();
  w.n_antennas = n_antennas;
  w.weights.assign(std::size_t(w.n_rows) * n_antennas, cdouble{});
  w.kind = BeamformerKind::AntennaSelection;
  w.provenance = "antenna selection T=" + std::to_string(w.n_rows) +
                 " Na=" + std::to_string(n_antennas);
  for (int t = 0; t < w.n_rows; ++t) {
    w.weights[std::size_t(t) * n_antennas + omega.positions[t]] = cdouble(1.0, 0.0);
  }
  return w;
}

Beamformer conv_beamformer(const Filter& filter, const SensorSet& shifts,
                           int n_antennas) {
  if (shifts.positions.empty()) {
    throw std::invalid_argument("conv_beamformer: empty shift set");
  }
  const int P = filter.length();
  if (shifts.positions.back() + P > n_antennas) {
    throw std::invalid_argument("conv_beamformer: max shift " +
                                std::to_string(shifts.positions.back()) + " plus P=" +
                                std::to_string(P) + " overruns aperture of " +
                                std::to_string(n_antennas));
  }
  Beamformer w;
  w.n_rows = shifts.count();
  w.n_antennas = n_antennas;
  w.weights.assign(std::size_t(w.n_rows) * n_antennas, cdouble{});
  w.kind = BeamformerKind::ConvBeamspace;
  w.provenance = "conv beamspace P=" + std::to_string(P) +
                 " T=" + std::to_string(w.n_rows);
  for (int t = 0; t < w.n_rows; ++t) {
    cdouble* row = w.weights.data() + std::size_t(t) * n_antennas;
    const int k = shifts.positions[t];
    for (int p = 0; p < P; ++p) row[k + p] = std::conj(filter.taps[p]);
  }
  validate_unit_rows(w, "conv_beamformer");
  return w;
}

cdouble filter_response(const Filter& filter, double f) {
  cdouble sum{};
  for (int n = 0; n < filter.length(); ++n) {
    sum += std::conj(filter.taps[n]) * std::polar(1.0, kPi * n * f);
  }
  return sum;
}

Beampattern beampattern(const Filter& filter, const SpatialGrid& grid) {
  Beampattern bp;
  bp.values.resize(grid.n_points);
  for (int n = 0; n < grid.n_points; ++n) {
    bp.values[n] = std::norm(filter_response(filter, grid.points[n]));
  }
  return bp;
}

CVec apply_to_ula_steering(const Beamformer& w, double f) {
  if (!(f >= -1.0 && f < 1.0)) {
    throw std::invalid_argument("apply_to_ula_steering: f must lie in [-1, 1)");
  }
  std::vector<cdouble> a(w.n_antennas);
  for (int i = 0; i < w.n_antennas; ++i) a[i] = std::polar(1.0, kPi * i * f);
  // Rows of the stored matrix are already w_t^H, so this is a plain product.
  CVec y(w.n_rows);
  for (int t = 0; t < w.n_rows; ++t) {
    const cdouble* row = w.row(t);
    double yr = 0.0, yi = 0.0;
    for (int i = 0; i < w.n_antennas; ++i) {
      const double wr = row[i].real(), wi = row[i].imag();
      const double ar = a[i].real(), ai = a[i].imag();
      yr += wr * ar - wi * ai;
      yi += wr * ai + wi * ar;
    }
    y[t] = cdouble(yr, yi);
  }
  return y;
}

IsotropyReport check_isotropy(const Beamformer& w, const SpatialGrid& grid) {
  IsotropyReport report;
  report.tolerance = 1e-6 * w.n_rows;
  for (int n = 0; n < grid.n_points; ++n) {
    const CVec y = apply_to_ula_steering(w, grid.points[n]);
    double gain = 0.0;
    for (const cdouble& v : y) gain += std::norm(v);
    report.max_gain_deviation =
        std::max(report.max_gain_deviation, std::abs(gain - w.n_rows));
  }
  report.isotropic = report.max_gain_deviation <= report.tolerance;
  return report;
}

void write_beamformer(std::ostream& os, const Beamformer& w) {
  char token[80];
  for (int t = 0; t < w.n_rows; ++t) {
    const cdouble* row = w.row(t);
    for (int a = 0; a < w.n_antennas; ++a) {
      std::snprintf(token, sizeof(token), "%.17g%+.17gj", row[a].real(), row[a].imag());
      if (a) os << ' ';
      os << token;
    }
    os << '\n';
  }
}

std::string beamformer_to_text(const Beamformer& w) {
  std::ostringstream os;
  write_beamformer(os, w);
  return os.str();
}

}  // namespace beamcode
