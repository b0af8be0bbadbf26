#include "beamcode/spatial.hpp"

#include <cmath>
#include <complex>

#include "beamcode/rng.hpp"
#include "doctest.h"

using namespace beamcode;

namespace {

CVec random_cvec(RngStream& rng, int len) {
  CVec v(len);
  for (auto& e : v) e = rng.next_complex_gaussian(1.0);
  return v;
}

}  // namespace

TEST_CASE("make_grid produces the uniform frequency grid") {
  const SpatialGrid g2 = make_grid(2);
  CHECK(g2.points[0] == -1.0);
  CHECK(g2.points[1] == 0.0);

  const SpatialGrid g4 = make_grid(4);
  CHECK(g4.points[0] == -1.0);
  CHECK(g4.points[1] == -0.5);
  CHECK(g4.points[2] == 0.0);
  CHECK(g4.points[3] == 0.5);

  const SpatialGrid g = make_grid(1024);
  CHECK(g.points[0] == -1.0);
  CHECK(g.points[512] == 0.0);
  CHECK(g.points[1023] == doctest::Approx(1.0 - 2.0 / 1024).epsilon(1e-15));

  CHECK_THROWS_AS(make_grid(1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-3), std::invalid_argument);
}

TEST_CASE("grid is symmetric about zero away from the -1 endpoint") {
  for (int n_points : {2, 5, 16, 1024}) {
    const SpatialGrid g = make_grid(n_points);
    for (int i = 1; i < n_points; ++i) {
      CHECK(g.points[i] + g.points[n_points - i] == doctest::Approx(0.0).epsilon(1e-15));
    }
    for (int i = 1; i < n_points; ++i) CHECK(g.points[i] > g.points[i - 1]);
  }
}

TEST_CASE("steering vectors") {
  const CVec ones = steering_vector(make_sensor_set({0, 1, 2}), 0.0);
  for (const cdouble& e : ones) {
    CHECK(e.real() == doctest::Approx(1.0));
    CHECK(e.imag() == doctest::Approx(0.0));
  }

  // sensors {0, 2} at f = 0.5: second entry is e^{j pi} = -1
  const CVec a = steering_vector(make_sensor_set({0, 2}), 0.5);
  CHECK(a[0].real() == doctest::Approx(1.0));
  CHECK(a[1].real() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(a[1].imag()) < 1e-12);

  CHECK_THROWS_AS(steering_vector(ula(3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(steering_vector(ula(3), -1.5), std::invalid_argument);
}

TEST_CASE("steering vector entries have unit modulus") {
  RngStream rng(11);
  const SensorSet sensors = make_sensor_set({0, 3, 7, 19, 31});
  for (int i = 0; i < 50; ++i) {
    const double f = -1.0 + 2.0 * rng.next_unit();
    for (const cdouble& e : steering_vector(sensors, f)) {
      CHECK(std::abs(std::abs(e) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("sensor set validation") {
  CHECK_THROWS_AS(make_sensor_set({}), std::invalid_argument);
  CHECK_THROWS_AS(make_sensor_set({-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_sensor_set({0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_sensor_set({5, 3}), std::invalid_argument);
  CHECK(ula(4).positions == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("subspace distance on reference pairs") {
  const cdouble j{0.0, 1.0};
  CHECK(subspace_distance({1.0, j}, {1.0, j}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(subspace_distance({1.0, 0.0}, {0.0, 1.0}) == 1.0);
  CHECK(subspace_distance({1.0, 1.0}, {1.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(subspace_distance({0.0, 0.0}, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(subspace_distance({1.0, 0.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("subspace distance properties on random pairs") {
  RngStream rng(7);
  for (int i = 0; i < 200; ++i) {
    const int len = 2 + int(rng.next_below(6));
    const CVec u = random_cvec(rng, len);
    const CVec v = random_cvec(rng, len);
    const double duv = subspace_distance(u, v);

    CHECK(duv >= 0.0);
    CHECK(duv <= 1.0);
    CHECK(duv == doctest::Approx(subspace_distance(v, u)).epsilon(1e-12));
    CHECK(subspace_distance(u, u) <= 1e-12);

    // scale invariance under nonzero complex scalings
    const cdouble c = std::polar(0.5 + rng.next_unit(), 6.0 * rng.next_unit());
    const cdouble c2 = std::polar(0.5 + rng.next_unit(), 6.0 * rng.next_unit());
    CVec cu = u, cv = v;
    for (auto& e : cu) e *= c;
    for (auto& e : cv) e *= c2;
    CHECK(subspace_distance(cu, cv) == doctest::Approx(duv).epsilon(1e-12));
  }
}

TEST_CASE("minimum subspace distance with achieving pair") {
  const std::vector<CVec> words{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const MinDistanceResult r = min_subspace_distance(words);
  CHECK(r.distance == doctest::Approx(0.5).epsilon(1e-12));
  // pairs (0,2) and (1,2) tie at 0.5; the lexicographically smaller one wins
  CHECK(r.first == 0);
  CHECK(r.second == 2);

  const cdouble c{0.3, -1.2};
  const std::vector<CVec> collinear{{1.0, cdouble(0, 2)}, {c, c * cdouble(0, 2)}};
  CHECK(min_subspace_distance(collinear).distance == doctest::Approx(0.0).epsilon(1e-12));

  const std::vector<CVec> identity{{1.0, 0.0}, {0.0, 1.0}};
  CHECK(min_subspace_distance(identity).distance == 1.0);

  CHECK_THROWS_AS(min_subspace_distance(std::vector<CVec>{{1.0}}), std::invalid_argument);
}

TEST_CASE("channel realization validation") {
  const SpatialGrid grid = make_grid(8);
  const ChannelRealization truth =
      make_channel_realization(std::polar(1.0, 0.7), 3, grid);
  CHECK(truth.f_index == 3);
  CHECK_THROWS_AS(make_channel_realization(cdouble(2.0, 0.0), 0, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_channel_realization(cdouble(1.0, 0.0), 8, grid),
                  std::invalid_argument);
}
