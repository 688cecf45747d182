#include <doctest.h>

#include "../oracles.hpp"
#include "vaacb/hypervolume.hpp"
#include "vaacb/rng.hpp"

using namespace vaacb;

TEST_CASE("two-point front") {
  const std::vector<Point> f{{0.5, 0.5}, {0.25, 0.75}};
  CHECK(hypervolume(f, {1, 1}) == doctest::Approx(0.3125));
  CHECK(oracle::hv2_inclusion_exclusion({{0.5, 0.5}, {0.25, 0.75}}, {1, 1}) == doctest::Approx(0.3125));
}

TEST_CASE("edge cases") {
  CHECK(hypervolume(std::vector<Point>{}, {1, 1, 1}) == 0.0);
  CHECK(hypervolume(std::vector<Point>{{0, 0, 0}}, {1, 2, 3}) == doctest::Approx(6.0));
  CHECK(hypervolume(std::vector<Point>{{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}}, {1, 1, 1}) == doctest::Approx(0.125));
  CHECK_THROWS(hypervolume(std::vector<Point>{{0, 0}}, {1, 1, 1}));
}

TEST_CASE("2-D fronts against inclusion-exclusion") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> f;
    std::vector<std::array<double, 2>> g;
    for (int i = 0; i < 8; ++i) {
      const double a = rng.uniform(0, 1), b = rng.uniform(0, 1);
      f.push_back({a, b});
      g.push_back({a, b});
    }
    CHECK(hypervolume(f, {1.2, 1.1}) == doctest::Approx(oracle::hv2_inclusion_exclusion(g, {1.2, 1.1})).epsilon(1e-12));
  }
}

TEST_CASE("3-D fronts against Monte Carlo") {
  Rng rng(4);
  for (int t = 0; t < 5; ++t) {
    std::vector<Point> f;
    std::vector<std::array<double, 3>> g;
    for (int i = 0; i < 10; ++i) {
      const double a = rng.uniform(0, 1), b = rng.uniform(0, 1), c = rng.uniform(0, 1);
      f.push_back({a, b, c});
      g.push_back({a, b, c});
    }
    CHECK(hypervolume(f, {1, 1, 1}) == doctest::Approx(oracle::hv3_monte_carlo(g, {1, 1, 1}, 400000, 9 + t)).epsilon(0.01));
  }
}

TEST_CASE("normalized hypervolume") {
  const std::vector<Point> a{{0, 10, 100}}, b{{1, 20, 300}};
  const ObjectiveRange r = objective_range(std::vector<std::vector<Point>>{a, b});
  CHECK(r.ideal == Point{0, 10, 100});
  CHECK(r.nadir == Point{1, 20, 300});
  CHECK(normalized_hypervolume(a, r) == doctest::Approx(1.331));
  CHECK(normalized_hypervolume(b, r) == doctest::Approx(0.001));
}
