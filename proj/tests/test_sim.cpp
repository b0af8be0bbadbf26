#include "beamcode/sim.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "beamcode/chancode.hpp"
#include "beamcode/golomb.hpp"
#include "doctest.h"

using namespace beamcode;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SubspaceCode orthonormal_code(int dim) {
  SubspaceCode code;
  code.n_codewords = dim;
  code.dim = dim;
  code.codewords.assign(std::size_t(dim) * dim, cdouble{});
  code.gains.assign(dim, 1.0);
  for (int n = 0; n < dim; ++n) code.codewords[std::size_t(n) * dim + n] = 1.0;
  code.min_distance = MinDistanceResult{1.0, 0, 1};
  return code;
}

SubspaceCode bc5_code(const SpatialGrid& grid) {
  return antenna_space_code(make_sensor_set(bose_chowla(5).marks), grid);
}

}  // namespace

TEST_CASE("snr to sigma") {
  CHECK(snr_to_sigma(0.0) == 1.0);
  CHECK(snr_to_sigma(20.0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(snr_to_sigma(-20.0) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(snr_to_sigma(kInf) == 0.0);
}

TEST_CASE("region selection") {
  const SpatialGrid grid = make_grid(1024);
  const std::vector<int> inner = region_indices(grid, -0.2, 0.2);
  CHECK(inner.size() == 205);
  for (int n : inner) {
    CHECK(grid.points[n] >= -0.2);
    CHECK(grid.points[n] <= 0.2);
  }
  CHECK(region_indices(grid, -1.0, 1.0).size() == 1024);
  // inclusive endpoints
  const SpatialGrid g4 = make_grid(4);
  CHECK(region_indices(g4, -0.5, 0.0).size() == 2);
}

TEST_CASE("synthesize is exact in the noiseless case") {
  const SpatialGrid grid = make_grid(8);
  const Beamformer w = antenna_selection_beamformer(ula(4), 8);
  const ChannelRealization truth =
      make_channel_realization(std::polar(1.0, 1.1), 5, grid);
  RngStream rng(3);
  const Measurement m = synthesize(w, grid, truth, 0.0, rng);
  const CVec expected = apply_to_ula_steering(w, grid.points[5]);
  for (int t = 0; t < 4; ++t) {
    CHECK(m.y[t] == truth.alpha * expected[t]);
  }
  CHECK_THROWS_AS(synthesize(w, grid, ChannelRealization{cdouble(1.0, 0.0), 9}, 0.0, rng),
                  std::invalid_argument);
}

TEST_CASE("noise draws have the configured variance") {
  RngStream rng(2024);
  const double sigma = 2.0;
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::norm(rng.next_complex_gaussian(sigma));
  const double variance = sum / n;
  CHECK(variance == doctest::Approx(sigma * sigma).epsilon(0.02));
}

TEST_CASE("ml decoding basics") {
  const SubspaceCode code = orthonormal_code(4);

  CVec y(4, cdouble{});
  y[2] = cdouble(0.0, 0.7);  // orthogonal to every codeword but index 2
  CHECK(ml_decode(y, code) == 2);

  // ties break towards the smallest index
  CVec tie(4, cdouble{});
  tie[0] = tie[1] = cdouble(1.0, 0.0);
  CHECK(ml_decode(tie, code) == 0);

  CHECK_THROWS_AS(ml_decode(CVec(3, cdouble{1.0, 0.0}), code), std::invalid_argument);
}

TEST_CASE("ml decoding equals minimum-subspace-distance decoding") {
  const SpatialGrid grid = make_grid(24);
  const SubspaceCode code = bc5_code(grid);
  RngStream rng(77);
  for (int i = 0; i < 100; ++i) {
    const int k = int(rng.next_below(24));
    CVec y(code.codeword(k), code.codeword(k) + code.dim);
    for (auto& v : y) v += rng.next_complex_gaussian(0.5);

    const int ml = ml_decode(y, code);
    int md = -1;
    double best = 2.0;
    for (int n = 0; n < code.n_codewords; ++n) {
      const CVec c(code.codeword(n), code.codeword(n) + code.dim);
      const double d = subspace_distance(y, c);
      if (d < best) {
        best = d;
        md = n;
      }
    }
    CHECK(ml == md);
  }
}

TEST_CASE("decoder ignores the channel coefficient") {
  const SpatialGrid grid = make_grid(24);
  const SubspaceCode code = bc5_code(grid);
  RngStream rng(78);
  for (int i = 0; i < 50; ++i) {
    const int k = int(rng.next_below(24));
    CVec y(code.codeword(k), code.codeword(k) + code.dim);
    for (auto& v : y) v += rng.next_complex_gaussian(0.7);
    const int base = ml_decode(y, code);
    const cdouble phase = std::polar(1.0, 6.28 * rng.next_unit());
    CVec rotated = y;
    for (auto& v : rotated) v *= phase;
    CHECK(ml_decode(rotated, code) == base);
  }
}

TEST_CASE("noiseless exhaustive recovery") {
  const SpatialGrid grid = make_grid(24);
  CHECK(noiseless_exhaustive_recovery(bc5_code(grid)));
  CHECK(noiseless_exhaustive_recovery(
      build_code(antenna_selection_beamformer(ula(5), 24), grid)));
}

TEST_CASE("error bound evaluation") {
  // d_min = 0 makes the bound vacuous
  CHECK(ml_error_bound(32.0, 1.0, 1.0, 0.0, 1024) == 1.0);

  // d_min = 1, gain = T: N_g exp(-T / (4 sigma^2)), below the clip at sigma = 1
  CHECK(ml_error_bound(32.0, 1.0, 1.0, 1.0, 1024) ==
        doctest::Approx(1024.0 * std::exp(-8.0)).epsilon(1e-12));
  // the same bound clips once sigma makes it vacuous
  CHECK(ml_error_bound(32.0, 1.0, 3.0, 1.0, 1024) == 1.0);

  // reference case: still above 1 at sigma = 1, so clipped
  CHECK(ml_error_bound(32.0, 1.0, 1.0, 0.87, 1024) == 1.0);

  // noiseless limits
  CHECK(ml_error_bound(32.0, 1.0, 0.0, 0.5, 1024) == 0.0);
  CHECK(ml_error_bound(32.0, 1.0, 0.0, 0.0, 1024) == 1.0);

  CHECK_THROWS_AS(ml_error_bound(32.0, 1.0, 1.0, 1.5, 1024), std::invalid_argument);
  CHECK_THROWS_AS(ml_error_bound(32.0, 1.0, 1.0, -0.1, 1024), std::invalid_argument);
}

TEST_CASE("convolutional beamspace bound specialization") {
  const Filter unit = make_filter({cdouble(1.0, 0.0)});
  CHECK(cbs_error_bound(unit, 0.1, 0.8, 1.0, 1.0, 1024, 32) ==
        doctest::Approx(ml_error_bound(32.0, 1.0, 1.0, 0.8, 1024)).epsilon(1e-12));

  // boxcar of length 3 at f = 0 has gain 3T
  const Filter box = boxcar_filter(3);
  CHECK(cbs_error_bound(box, 0.0, 0.8, 1.0, 2.0, 1024, 32) ==
        doctest::Approx(ml_error_bound(96.0, 1.0, 2.0, 0.8, 1024)).epsilon(1e-12));

  // near a stopband null the gain collapses and the bound goes vacuous
  const double pass = cbs_error_bound(box, 0.0, 0.8, 1.0, 1.0, 1024, 32);
  const double stop = cbs_error_bound(box, 2.0 / 3, 0.8, 1.0, 1.0, 1024, 32);
  CHECK(stop == 1.0);
  CHECK(pass < stop);

  // Bose-Chowla specialization replaces d_min by 1 - 2/T
  CHECK(cbs_error_bound(unit, 0.1, 0.99, 1.0, 1.0, 1024, 32, true) ==
        doctest::Approx(ml_error_bound(32.0, 1.0, 1.0, 1.0 - 2.0 / 32, 1024))
            .epsilon(1e-12));
}

TEST_CASE("monte carlo reproducibility across worker counts") {
  const SpatialGrid grid = make_grid(24);
  const SubspaceCode code = bc5_code(grid);

  SimConfig cfg;
  cfg.snr_db = {-5.0, 0.0, 5.0};
  cfg.n_trials = 500;
  cfg.seed = 42;

  cfg.n_workers = 1;
  const PeCurve serial = monte_carlo(cfg, grid, code);
  cfg.n_workers = 3;
  const PeCurve parallel = monte_carlo(cfg, grid, code);
  cfg.n_workers = 8;
  const PeCurve wide = monte_carlo(cfg, grid, code);

  REQUIRE(serial.points.size() == 3);
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    CHECK(serial.points[i].n_errors == parallel.points[i].n_errors);
    CHECK(serial.points[i].empirical_pe == parallel.points[i].empirical_pe);
    CHECK(serial.points[i].bound_pe == parallel.points[i].bound_pe);
    CHECK(serial.points[i].n_errors == wide.points[i].n_errors);
    CHECK(serial.points[i].bound_pe == wide.points[i].bound_pe);
  }
}

TEST_CASE("monte carlo noiseless and structural invariants") {
  const SpatialGrid grid = make_grid(24);
  const SubspaceCode code = bc5_code(grid);

  SimConfig cfg;
  cfg.snr_db = {kInf};
  cfg.n_trials = 400;
  cfg.seed = 9;
  const PeCurve noiseless = monte_carlo(cfg, grid, code);
  CHECK(noiseless.points[0].n_errors == 0);
  CHECK(noiseless.points[0].empirical_pe == 0.0);
  CHECK(noiseless.points[0].bound_pe == 0.0);

  cfg.snr_db = {-3.0, 3.0};
  const PeCurve curve = monte_carlo(cfg, grid, code);
  for (const PePoint& p : curve.points) {
    CHECK(p.empirical_pe == doctest::Approx(double(p.n_errors) / p.n_trials));
    CHECK(p.bound_pe >= 0.0);
    CHECK(p.bound_pe <= 1.0);
  }

  // restricted region: all decoding errors counted against in-region truths
  cfg.region_lo = -0.25;
  cfg.region_hi = 0.25;
  CHECK_NOTHROW(monte_carlo(cfg, grid, code));

  cfg.region_lo = 0.791;  // captures at most one grid point
  cfg.region_hi = 0.82;
  CHECK_THROWS_AS(monte_carlo(cfg, grid, code), std::invalid_argument);
}

TEST_CASE("monte carlo error rates improve with SNR") {
  const SpatialGrid grid = make_grid(24);
  const SubspaceCode code = bc5_code(grid);

  SimConfig cfg;
  cfg.snr_db = {-6.0, 0.0, 6.0, 12.0};
  cfg.n_trials = 2000;
  cfg.seed = 4;
  const PeCurve curve = monte_carlo(cfg, grid, code);
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const double prev = curve.points[i - 1].empirical_pe;
    const double margin = 3.0 * std::sqrt(std::max(prev, 1e-4) / cfg.n_trials);
    CHECK(curve.points[i].empirical_pe <= prev + margin);
  }
}

TEST_CASE("Bose-Chowla selection decodes at or below the pruned RM code") {
  const SpatialGrid grid = make_grid(1024);
  const SubspaceCode bc = build_code(
      antenna_selection_beamformer(bose_chowla_sensors(32), 1024), grid);
  const BinaryCodebook pruned = prune_deterministic(reed_muller(5, 2), 1024);
  const SubspaceCode rm = build_code(bpsk_beamformer(to_bpsk(pruned), grid), grid);
  CHECK(bc.min_distance.distance > rm.min_distance.distance);

  SimConfig cfg;
  cfg.snr_db = {-6.0, -4.0, -2.0};
  cfg.n_trials = 2000;
  cfg.seed = 5;
  const PeCurve bc_curve = monte_carlo(cfg, grid, bc);
  const PeCurve rm_curve = monte_carlo(cfg, grid, rm);
  for (std::size_t i = 0; i < cfg.snr_db.size(); ++i) {
    const double margin = 3.0 * std::sqrt(0.25 / cfg.n_trials);
    CHECK(bc_curve.points[i].empirical_pe <=
          rm_curve.points[i].empirical_pe + margin);
    CHECK(bc_curve.points[i].bound_pe <= rm_curve.points[i].bound_pe + 1e-12);
  }
}

TEST_CASE("pe curve serialization") {
  PeCurve curve;
  curve.points.push_back(PePoint{-10.0, 0.25, 1.0, 400, 100});
  curve.points.push_back(PePoint{0.0, 0.0025, 0.125, 400, 1});
  std::ostringstream os;
  write_pe_curve(os, curve);
  CHECK(os.str() == "SNR Pe Peub\n-10 0.25 1\n0 0.0025 0.125\n");
}
