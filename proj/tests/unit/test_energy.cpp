#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "../oracles.hpp"
#include "vaacb/energy.hpp"
#include "vaacb/rng.hpp"

using namespace vaacb;

namespace {
const EnergyParams ep = default_energy_params();
}

TEST_CASE("propulsion power values") {
  CHECK(propulsion_power(0.0, ep) == doctest::Approx(168.4842).epsilon(1e-14));
  // Written-out recomputation at 10 m/s (long double to cross-check rounding).
  const long double v = 10.0L, v0 = 4.03L;
  const long double induced = std::sqrt(std::sqrt(1.0L + v * v * v * v / (4.0L * v0 * v0 * v0 * v0)) - v * v / (2.0L * v0 * v0));
  const long double ref = 79.8563L * (1.0L + 3.0L * v * v / 14400.0L) + 88.6279L * induced + 0.5L * 0.6L * 1.225L * 0.05L * 0.503L * v * v * v;
  CHECK(propulsion_power(10.0, ep) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
  CHECK(propulsion_power(10.0, ep) == doctest::Approx(oracle::power(10.0)).epsilon(1e-14));
  const double big = 1e5;
  CHECK(propulsion_power(big, ep) / (big * big * big) == doctest::Approx(0.5 * 1.225 * 0.6 * 0.05 * 0.503).epsilon(1e-3));
}

TEST_CASE("analytic derivative matches finite differences") {
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const double v = rng.uniform(0.5, 40.0), h = 1e-5;
    const double fd = (propulsion_power(v + h, ep) - propulsion_power(v - h, ep)) / (2 * h);
    CHECK(propulsion_power_derivative(v, ep) == doctest::Approx(fd).epsilon(1e-4));
    CHECK(propulsion_power(v, ep) > 0.0);
  }
}

TEST_CASE("max-range speed") {
  const double v = max_range_speed(ep);
  CHECK(v == max_range_speed(ep));
  const double best = v / propulsion_power(v, ep);
  double grid = 0.0;
  for (int k = 1; k <= 6000; ++k) grid = std::max(grid, 0.01 * k / oracle::power(0.01 * k));
  CHECK(best >= grid);
  CHECK((v + 0.5) / propulsion_power(v + 0.5, ep) < best);
  CHECK((v - 0.5) / propulsion_power(v - 0.5, ep) < best);
}

TEST_CASE("leg energy") {
  CHECK(leg_energy({0, 0, 0, 0}, 10.0, ep) == doctest::Approx(1684.842));
  const double v = max_range_speed(ep);
  const FlightLeg flat = make_leg({0, 0, 85}, {100, 0, 85}, v);
  CHECK(flat.duration_s == doctest::Approx(100 / v));
  CHECK(leg_energy(flat, 0.0, ep) == doctest::Approx(oracle::power(v) * 100 / v));
  const FlightLeg up = make_leg({0, 0, 80}, {30, 40, 90}, v);
  const FlightLeg down = make_leg({0, 0, 90}, {30, 40, 80}, v);
  CHECK(up.horizontal_dist_m == doctest::Approx(50.0));
  CHECK(leg_energy(up, 0.0, ep) - leg_energy(down, 0.0, ep) == doctest::Approx(392.4));
  CHECK_THROWS_AS(leg_energy(flat, -1.0, ep), std::invalid_argument);
  CHECK_THROWS_AS(leg_energy({10, 0, 0, 0}, 0.0, ep), std::invalid_argument);
  double prev = -1.0;
  for (double d = 0; d <= 200; d += 20) {
    const double e = leg_energy({d, 3.0, v, d / v}, 1.0, ep);
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("formation moves and the energy matrix") {
  const double v = max_range_speed(ep);
  const std::vector<Vec3> a{{0, 0, 80}, {10, 0, 85}, {20, 0, 90}};
  const std::vector<Vec3> b{{30, 40, 80}, {10, 5, 85}, {20, 0, 85}};
  const FormationMove m = plan_formation_move(a, b, v, ep);
  CHECK(m.formation_time_s == doctest::Approx(50.0 / v));
  CHECK(m.hover_tail_s[0] == doctest::Approx(0.0));
  CHECK(m.hover_tail_s[1] == doctest::Approx(45.0 / v));
  CHECK(m.hover_tail_s[2] == doctest::Approx(50.0 / v));
  const std::vector<oracle::P3> oa{{0, 0, 80}, {10, 0, 85}, {20, 0, 90}};
  const std::vector<oracle::P3> ob{{30, 40, 80}, {10, 5, 85}, {20, 0, 85}};
  CHECK(m.total_energy_j == doctest::Approx(oracle::move_energy(oa, ob, v)));

  const EnergyMatrix e = energy_matrix({a, b}, ep);
  CHECK(e(0, 0) == 0.0);
  CHECK(e(1, 1) == 0.0);
  CHECK(e(0, 1) == doctest::Approx(m.total_energy_j));
  const std::vector<int> order{1, 0};
  CHECK(e.tour_cost(order) == doctest::Approx(e(1, 0)));

  const EnergyMatrix single = energy_matrix({{{0, 0, 85}}, {{100, 0, 85}}}, ep);
  CHECK(single(0, 1) == doctest::Approx(leg_energy(make_leg({0, 0, 85}, {100, 0, 85}, v), 0.0, ep)));
  CHECK_THROWS_AS(energy_matrix({a, {{0, 0, 80}}}, ep), std::invalid_argument);
}

TEST_CASE("energy matrix is invariant under UAV relabeling") {
  Rng rng(6);
  std::vector<std::vector<Vec3>> f(4);
  for (auto& form : f)
    for (int i = 0; i < 5; ++i) form.push_back({rng.uniform(0, 100), rng.uniform(0, 100), rng.uniform(75, 95)});
  std::vector<std::size_t> perm{3, 0, 4, 1, 2};
  std::vector<std::vector<Vec3>> g(4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i : perm) g[j].push_back(f[j][i]);
  const EnergyMatrix a = energy_matrix(f, ep), b = energy_matrix(g, ep);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) CHECK(a(x, y) == doctest::Approx(b(x, y)).epsilon(1e-12));
}

TEST_CASE("best tour equals the exhaustive TSP oracle") {
  Rng rng(12);
  const double v = max_range_speed(ep);
  for (int t = 0; t < 10; ++t) {
    const std::size_t nb = 6;
    std::vector<std::vector<Vec3>> f(nb);
    std::vector<std::vector<oracle::P3>> of(nb);
    for (std::size_t j = 0; j < nb; ++j)
      for (int i = 0; i < 3; ++i) {
        const Vec3 p{rng.uniform(0, 100), rng.uniform(0, 100), rng.uniform(75, 95)};
        f[j].push_back(p);
        of[j].push_back({p.x, p.y, p.z});
      }
    const EnergyMatrix m = energy_matrix(f, ep);
    std::vector<std::vector<double>> cost(nb, std::vector<double>(nb));
    for (std::size_t a = 0; a < nb; ++a)
      for (std::size_t b = 0; b < nb; ++b) cost[a][b] = oracle::move_energy(of[a], of[b], v);
    std::vector<int> order(nb);
    std::iota(order.begin(), order.end(), 0);
    double best = 1e300;
    do best = std::min(best, m.tour_cost(order));
    while (std::next_permutation(order.begin(), order.end()));
    CHECK(best == doctest::Approx(oracle::exhaustive_tsp(cost)).epsilon(1e-12));
  }
}
