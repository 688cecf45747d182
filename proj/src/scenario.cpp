#include "vaacb/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "vaacb/channel.hpp"
#include "vaacb/rng.hpp"

namespace vaacb {

double thermal_noise_w(double bandwidth_hz) {
  return std::pow(10.0, (-174.0 + 10.0 * std::log10(bandwidth_hz)) / 10.0) * 1e-3;
}

RadioParams default_radio_params() {
  RadioParams r;
  r.carrier_hz = 2.4e9;
  r.wavelength_m = 299792458.0 / r.carrier_hz;
  r.tx_power_w = 0.1;
  r.bandwidth_hz = 1e6;
  r.noise_power_w = thermal_noise_w(r.bandwidth_hz);
  r.array_efficiency = 1.0;
  r.pathloss_const = std::pow(4.0 * kPi / r.wavelength_m, 2.0);
  r.pathloss_exp = 3.0;
  r.k1 = 10.0;
  r.k2 = 0.6;
  r.xi_los = 1.0;
  r.xi_nlos = 100.0;

  constexpr double gu_tx_power_w = 0.1;
  constexpr double gu_link_m = 200.0;
  r.gu_rx_power_w = gu_tx_power_w * channel_gain(gu_link_m, 1.0, r);
  return r;
}

EnergyParams default_energy_params() {
  EnergyParams e;
  e.p1_w = 79.8563;
  e.p2_w = 88.6279;
  e.v_tip_mps = 120.0;
  e.v0_mps = 4.03;
  e.d0 = 0.6;
  e.s = 0.05;
  e.rotor_area_m2 = 0.503;
  e.air_density = 1.225;
  e.uav_mass_kg = 2.0;
  e.gravity_mps2 = 9.81;
  return e;
}

Scenario build_default_scenario(std::size_t n_uavs, std::uint64_t seed) {
  if (n_uavs < 1) throw std::invalid_argument("n_uavs must be at least 1");
  Scenario sc;
  sc.radio = default_radio_params();
  sc.energy = default_energy_params();
  sc.master_seed = seed;

  Geometry& g = sc.geom;
  g.area_min_m = 0.0;
  g.area_max_m = 100.0;
  g.alt_min_m = 75.0;
  g.alt_max_m = 95.0;
  g.min_sep_m = 2.0;

  const double cx = 0.5 * (g.area_min_m + g.area_max_m);
  for (std::size_t j = 0; j < kDefaultBsCount; ++j) {
    const double a = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(kDefaultBsCount);
    g.bs_positions.push_back({cx + kDefaultBsRingRadiusM * std::cos(a), cx + kDefaultBsRingRadiusM * std::sin(a), 0.0});
    g.data_bits_per_bs.push_back(1e8);
  }

  Rng rng(seed);
  constexpr int kMaxAttempts = 10000;
  int attempts = 0;
  while (g.uav_initial_positions.size() < n_uavs) {
    if (++attempts > kMaxAttempts)
      throw std::runtime_error("could not place " + std::to_string(n_uavs) + " UAVs with the minimum separation");
    const Vec3 p{rng.uniform(g.area_min_m, g.area_max_m), rng.uniform(g.area_min_m, g.area_max_m),
                 rng.uniform(g.alt_min_m, g.alt_max_m)};
    bool ok = true;
    for (const Vec3& q : g.uav_initial_positions) {
      if (distance(p, q) < g.min_sep_m) {
        ok = false;
        break;
      }
    }
    if (ok) g.uav_initial_positions.push_back(p);
  }
  return sc;
}

namespace {

void require_positive(std::vector<Violation>& out, const std::string& path, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) out.push_back({path, "must be finite and strictly positive"});
}

bool in_box(const Geometry& g, const Vec3& p) {
  return p.x >= g.area_min_m && p.x <= g.area_max_m && p.y >= g.area_min_m && p.y <= g.area_max_m &&
         p.z >= g.alt_min_m && p.z <= g.alt_max_m;
}

}  // namespace

std::vector<Violation> validate(const Scenario& sc) {
  std::vector<Violation> v;
  const RadioParams& r = sc.radio;
  require_positive(v, "radio.wavelength_m", r.wavelength_m);
  require_positive(v, "radio.carrier_hz", r.carrier_hz);
  require_positive(v, "radio.tx_power_w", r.tx_power_w);
  require_positive(v, "radio.bandwidth_hz", r.bandwidth_hz);
  require_positive(v, "radio.noise_power_w", r.noise_power_w);
  require_positive(v, "radio.array_efficiency", r.array_efficiency);
  if (r.array_efficiency > 1.0) v.push_back({"radio.array_efficiency", "must not exceed 1"});
  require_positive(v, "radio.gu_rx_power_w", r.gu_rx_power_w);
  require_positive(v, "radio.pathloss_const", r.pathloss_const);
  require_positive(v, "radio.pathloss_exp", r.pathloss_exp);
  require_positive(v, "radio.k1", r.k1);
  require_positive(v, "radio.k2", r.k2);
  require_positive(v, "radio.xi_los", r.xi_los);
  require_positive(v, "radio.xi_nlos", r.xi_nlos);
  if (r.xi_nlos < r.xi_los) v.push_back({"radio.xi_nlos", "NLoS attenuation must be at least the LoS attenuation"});

  const EnergyParams& e = sc.energy;
  require_positive(v, "energy.p1_w", e.p1_w);
  require_positive(v, "energy.p2_w", e.p2_w);
  require_positive(v, "energy.v_tip_mps", e.v_tip_mps);
  require_positive(v, "energy.v0_mps", e.v0_mps);
  require_positive(v, "energy.d0", e.d0);
  require_positive(v, "energy.s", e.s);
  require_positive(v, "energy.rotor_area_m2", e.rotor_area_m2);
  require_positive(v, "energy.air_density_kg_m3", e.air_density);
  require_positive(v, "energy.uav_mass_kg", e.uav_mass_kg);
  require_positive(v, "energy.gravity_mps2", e.gravity_mps2);

  const Geometry& g = sc.geom;
  if (!(g.area_min_m < g.area_max_m)) v.push_back({"geometry.area_min_m", "area bounds must satisfy area_min_m < area_max_m"});
  if (!(g.alt_min_m < g.alt_max_m)) v.push_back({"geometry.alt_min_m", "altitude bounds must satisfy alt_min_m < alt_max_m"});
  if (!(g.alt_min_m > 0.0)) v.push_back({"geometry.alt_min_m", "altitude bounds must be above ground"});
  if (g.min_sep_m < 0.0) v.push_back({"geometry.min_sep_m", "must be non-negative"});
  if (g.uav_initial_positions.empty()) v.push_back({"geometry.uav_initial_positions_m", "at least one UAV required"});
  if (g.bs_positions.empty()) v.push_back({"geometry.bs_positions_m", "at least one BS required"});
  if (g.data_bits_per_bs.size() != g.bs_positions.size())
    v.push_back({"geometry.data_bits_per_bs", "must have one entry per BS"});
  for (std::size_t j = 0; j < g.data_bits_per_bs.size(); ++j)
    require_positive(v, "geometry.data_bits_per_bs[" + std::to_string(j) + "]", g.data_bits_per_bs[j]);

  for (std::size_t i = 0; i < g.uav_initial_positions.size(); ++i) {
    const std::string path = "geometry.uav_initial_positions_m[" + std::to_string(i) + "]";
    if (!in_box(g, g.uav_initial_positions[i])) v.push_back({path, "outside the flight box"});
    for (std::size_t k = i + 1; k < g.uav_initial_positions.size(); ++k) {
      if (distance(g.uav_initial_positions[i], g.uav_initial_positions[k]) < g.min_sep_m)
        v.push_back({path, "closer than min_sep_m to UAV " + std::to_string(k)});
    }
  }
  for (std::size_t j = 0; j < g.bs_positions.size(); ++j) {
    const Vec3& b = g.bs_positions[j];
    const std::string path = "geometry.bs_positions_m[" + std::to_string(j) + "]";
    if (b.z != 0.0) v.push_back({path, "BS must be at ground level (z = 0)"});
    if (b.x >= g.area_min_m && b.x <= g.area_max_m && b.y >= g.area_min_m && b.y <= g.area_max_m)
      v.push_back({path, "BS must lie outside the monitoring area"});
  }

  if (sc.quadrature.grid.n_theta < 18 || sc.quadrature.grid.n_phi < 36)
    v.push_back({"quadrature", "grid must be at least 18 x 36"});
  return v;
}

}  // namespace vaacb
