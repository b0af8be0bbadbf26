#include "beamcode/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace beamcode {

namespace {

int decode_against(const cdouble* y, int dim, const cdouble* codewords, int n) {
  int best = 0;
  double best_score = -1.0;
  for (int k = 0; k < n; ++k) {
    const cdouble* c = codewords + std::size_t(k) * dim;
    double ar = 0.0, ai = 0.0;
    for (int t = 0; t < dim; ++t) {
      const double yr = y[t].real(), yi = y[t].imag();
      const double cr = c[t].real(), ci = c[t].imag();
      ar += yr * cr + yi * ci;
      ai += yr * ci - yi * cr;
    }
    const double score = ar * ar + ai * ai;
    if (score > best_score) {
      best_score = score;
      best = k;
    }
  }
  return best;
}

}  // namespace

double snr_to_sigma(double snr_db) {
  return std::pow(10.0, -snr_db / 20.0);
}

std::vector<int> region_indices(const SpatialGrid& grid, double lo, double hi) {
  std::vector<int> indices;
  for (int n = 0; n < grid.n_points; ++n) {
    if (grid.points[n] >= lo && grid.points[n] <= hi) indices.push_back(n);
  }
  return indices;
}

Measurement synthesize(const Beamformer& w, const SpatialGrid& grid,
                       const ChannelRealization& truth, double sigma,
                       RngStream& rng) {
  if (truth.f_index < 0 || truth.f_index >= grid.n_points) {
    throw std::invalid_argument("synthesize: truth index outside grid");
  }
  Measurement m;
  m.truth = truth;
  m.y = apply_to_ula_steering(w, grid.points[truth.f_index]);
  for (cdouble& v : m.y) v *= truth.alpha;
  if (sigma > 0.0) {
    for (cdouble& v : m.y) v += rng.next_complex_gaussian(sigma);
  }
  return m;
}

int ml_decode(const CVec& y, const SubspaceCode& code) {
  if (int(y.size()) != code.dim) {
    throw std::invalid_argument("ml_decode: measurement length does not match codeword length");
  }
  return decode_against(y.data(), code.dim, code.codewords.data(), code.n_codewords);
}

double ml_error_bound(double gain, double alpha_mag, double sigma, double d_min,
                      int n_grid) {
  if (!(d_min >= 0.0 && d_min <= 1.0)) {
    throw std::invalid_argument("ml_error_bound: d_min must lie in [0, 1]");
  }
  const double margin = 1.0 - std::sqrt(1.0 - d_min);
  const double signal = alpha_mag * alpha_mag * gain * margin * margin;
  if (sigma == 0.0) {
    return signal > 0.0 ? 0.0 : 1.0;
  }
  const double bound = n_grid * std::exp(-signal / (4.0 * sigma * sigma));
  return std::min(bound, 1.0);
}

double cbs_error_bound(const Filter& filter, double f_k, double shifts_dmin,
                           double alpha_mag, double sigma, int n_grid, int T,
                           bool use_bc_lower_bound) {
  const double gain = std::norm(filter_response(filter, f_k)) * T;
  const double d = use_bc_lower_bound ? 1.0 - 2.0 / T : shifts_dmin;
  return ml_error_bound(gain, alpha_mag, sigma, d, n_grid);
}

PeCurve monte_carlo(const SimConfig& cfg, const SpatialGrid& grid,
                    const SubspaceCode& code) {
  if (cfg.n_trials < 1) {
    throw std::invalid_argument("monte_carlo: n_trials must be >= 1");
  }
  const std::vector<int> region = region_indices(grid, cfg.region_lo, cfg.region_hi);
  if (region.size() < 2) {
    throw std::invalid_argument("monte_carlo: region must contain at least 2 grid points");
  }
  if (code.n_codewords != grid.n_points) {
    throw std::invalid_argument("monte_carlo: code does not match grid");
  }

  // Un-normalized codewords b_n = sqrt(gain_n) * b_hat_n, materialized once.
  const int dim = code.dim;
  std::vector<cdouble> raw(code.codewords.size());
  for (int n = 0; n < code.n_codewords; ++n) {
    const double scale = std::sqrt(code.gains[n]);
    const cdouble* src = code.codeword(n);
    cdouble* dst = raw.data() + std::size_t(n) * dim;
    for (int t = 0; t < dim; ++t) dst[t] = scale * src[t];
  }

  int n_workers = cfg.n_workers > 0
                      ? cfg.n_workers
                      : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, cfg.n_trials);

  constexpr double two_pi = 6.283185307179586476925286766559005768;
  const double d_min = code.min_distance.distance;

  PeCurve curve;
  curve.points.reserve(cfg.snr_db.size());
  std::vector<double> trial_bounds(cfg.n_trials);
  std::vector<int> worker_errors(n_workers);

  for (std::size_t si = 0; si < cfg.snr_db.size(); ++si) {
    const double sigma = snr_to_sigma(cfg.snr_db[si]);

    auto run_block = [&](int worker, int begin, int end) {
      std::vector<cdouble> y(dim);
      int errors = 0;
      for (int trial = begin; trial < end; ++trial) {
        RngStream rng = RngStream::substream(cfg.seed, si, std::uint64_t(trial));
        const int k = region[rng.next_below(region.size())];
        const cdouble alpha = std::polar(1.0, two_pi * rng.next_unit());
        const cdouble* b = raw.data() + std::size_t(k) * dim;
        for (int t = 0; t < dim; ++t) y[t] = alpha * b[t];
        if (sigma > 0.0) {
          for (int t = 0; t < dim; ++t) y[t] += rng.next_complex_gaussian(sigma);
        }
        const int decoded =
            decode_against(y.data(), dim, code.codewords.data(), code.n_codewords);
        errors += decoded != k;
        trial_bounds[trial] =
            ml_error_bound(code.gains[k], 1.0, sigma, d_min, code.n_codewords);
      }
      worker_errors[worker] = errors;
    };

    if (n_workers == 1) {
      run_block(0, 0, cfg.n_trials);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(n_workers);
      const int per_worker = (cfg.n_trials + n_workers - 1) / n_workers;
      for (int worker = 0; worker < n_workers; ++worker) {
        const int begin = worker * per_worker;
        const int end = std::min(cfg.n_trials, begin + per_worker);
        pool.emplace_back(run_block, worker, begin, end);
      }
      for (std::thread& t : pool) t.join();
    }

    int n_errors = 0;
    for (int worker = 0; worker < n_workers; ++worker) n_errors += worker_errors[worker];
    // Bound mean accumulates in trial order so the result is independent of
    // the worker partition.
    double bound_sum = 0.0;
    for (int trial = 0; trial < cfg.n_trials; ++trial) bound_sum += trial_bounds[trial];

    PePoint point;
    point.snr_db = cfg.snr_db[si];
    point.n_trials = cfg.n_trials;
    point.n_errors = n_errors;
    point.empirical_pe = double(n_errors) / cfg.n_trials;
    point.bound_pe = bound_sum / cfg.n_trials;
    curve.points.push_back(point);
  }
  return curve;
}

bool noiseless_exhaustive_recovery(const SubspaceCode& code) {
  for (int k = 0; k < code.n_codewords; ++k) {
    if (decode_against(code.codeword(k), code.dim, code.codewords.data(),
                       code.n_codewords) != k) {
      return false;
    }
  }
  return true;
}

void write_pe_curve(std::ostream& os, const PeCurve& curve) {
  os << "SNR Pe Peub\n";
  char line[128];
  for (const PePoint& p : curve.points) {
    std::snprintf(line, sizeof(line), "%.10g %.10g %.10g\n", p.snr_db,
                  p.empirical_pe, p.bound_pe);
    os << line;
  }
}

}  // namespace beamcode
