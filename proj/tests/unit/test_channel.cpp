#include <doctest.h>

#include <cmath>

#include "vaacb/channel.hpp"
#include "vaacb/rng.hpp"

using namespace vaacb;

TEST_CASE("elevation examples") {
  CHECK(link_geometry({0, 200, 100}, {0, 0, 0}).elevation_deg == doctest::Approx(30.0));
  CHECK(link_geometry({5, 5, 100}, {5, 5, 0}).elevation_deg == doctest::Approx(90.0));
  CHECK(link_geometry({600, 0, 85}, {0, 0, 0}).elevation_deg == doctest::Approx(180.0 / kPi * std::asin(85.0 / 600.0)));
  // asin(h / d2) with clamping: d2 < h still yields 90 degrees.
  CHECK(link_geometry({50, 0, 100}, {0, 0, 0}).elevation_deg == doctest::Approx(90.0));
  CHECK_THROWS_AS(link_geometry({0, 0, 0}, {10, 0, 0}), std::invalid_argument);
  const LinkGeometry l = link_geometry({3, 4, 12}, {0, 0, 0});
  CHECK(l.d3_m == doctest::Approx(13.0));
  CHECK(l.d2_m == doctest::Approx(5.0));
  CHECK(l.h_m == doctest::Approx(12.0));
}

TEST_CASE("LoS probability examples") {
  CHECK(los_probability(10.0, 10.0, 0.3) == doctest::Approx(1.0 / 11.0));
  CHECK(los_probability(90.0, 10.0, 0.6) >= 0.9999);
  CHECK(los_probability(0.0, 10.0, 0.6) == doctest::Approx(1.0 / (1.0 + 10.0 * std::exp(6.0))));
}

TEST_CASE("channel gain") {
  RadioParams r = default_radio_params();
  r.xi_los = r.xi_nlos = 7.0;
  const double d = 180.0;
  for (double p : {0.0, 0.3, 1.0})
    CHECK(channel_gain(d, p, r) == doctest::Approx(1.0 / (r.pathloss_const * std::pow(d, 3) * 7.0)));
  r = default_radio_params();
  CHECK(channel_gain(d, 1.0, r) == doctest::Approx(1.0 / (r.pathloss_const * std::pow(d, 3) * r.xi_los)));
  CHECK(channel_gain(2 * d, 0.4, r) == doctest::Approx(channel_gain(d, 0.4, r) / 8.0));
  CHECK(channel_gain(d, 0.6, r) > channel_gain(d, 0.5, r));
  CHECK(channel_gain(d + 1, 0.6, r) < channel_gain(d, 0.6, r));
}

TEST_CASE("received power hand chain for a single UAV") {
  const Scenario sc = build_default_scenario(1, 3);
  const RadioParams& r = sc.radio;
  const Vec3 uav = sc.geom.uav_initial_positions[0];
  const Vec3 bs = sc.geom.bs_positions[0];
  const GainPattern g({{uav}, {1.0}, r.wavelength_m}, r.array_efficiency, {});
  const double p = received_power(g, direction_to(uav, bs), link_geometry(uav, bs), r);

  const double d2 = std::hypot(uav.x - bs.x, uav.y - bs.y);
  const double d3 = std::hypot(d2, uav.z - bs.z);
  const double elev = std::asin(std::min(1.0, uav.z / d2)) * 180.0 / kPi;
  const double plos = 1.0 / (1.0 + r.k1 * std::exp(-r.k2 * (elev - r.k1)));
  const double gain = 1.0 / (r.pathloss_const * std::pow(d3, r.pathloss_exp) * (r.xi_los * plos + r.xi_nlos * (1 - plos)));
  CHECK(p == doctest::Approx(r.tx_power_w * r.array_efficiency * gain).epsilon(1e-9));
}

TEST_CASE("rate and SINR") {
  const RadioParams r = default_radio_params();
  CHECK(rate(r.noise_power_w, r) == doctest::Approx(r.bandwidth_hz));
  CHECK(rate(3 * r.noise_power_w, r) == doctest::Approx(2 * r.bandwidth_hz));
  CHECK(rate(0.0, r) == 0.0);
  CHECK(interfered_sinr(0.0, r) == doctest::Approx(r.gu_rx_power_w / r.noise_power_w));
  CHECK(r.gu_rx_power_w > r.noise_power_w);
  CHECK(interfered_sinr(r.gu_rx_power_w - r.noise_power_w, r) == doctest::Approx(1.0));

  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const double p = rng.uniform(0.0, 100.0) * r.noise_power_w, h = 1e-3 * r.noise_power_w;
    CHECK(interfered_sinr(p + h, r) < interfered_sinr(p, r));
    CHECK(rate(p + h, r) > rate(p, r));
    // Concavity by second difference.
    CHECK(rate(p + 2 * h, r) - 2 * rate(p + h, r) + rate(p, r) <= 1e-6 * r.bandwidth_hz);
  }
}
