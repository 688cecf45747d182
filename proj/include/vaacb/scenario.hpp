#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vaacb/geometry.hpp"

namespace vaacb {

/// Radio and channel constants. Linear units throughout.
struct RadioParams {
  double wavelength_m = 0.0;
  double carrier_hz = 0.0;
  double tx_power_w = 0.0;         // total VAA transmit power
  double bandwidth_hz = 0.0;
  double noise_power_w = 0.0;
  double array_efficiency = 0.0;   // eta in (0,1]
  double gu_rx_power_w = 0.0;      // power an interfered BS receives from its own ground user
  double pathloss_const = 0.0;     // k0
  double pathloss_exp = 0.0;       // alpha
  double k1 = 0.0;
  double k2 = 0.0;
  double xi_los = 0.0;
  double xi_nlos = 0.0;
};

/// Rotary-wing propulsion constants.
struct EnergyParams {
  double p1_w = 0.0;               // blade profile power in hover
  double p2_w = 0.0;               // induced power in hover
  double v_tip_mps = 0.0;
  double v0_mps = 0.0;
  double d0 = 0.0;                 // fuselage drag ratio
  double s = 0.0;                  // rotor solidity
  double rotor_area_m2 = 0.0;
  double air_density = 0.0;        // kg/m^3
  double uav_mass_kg = 0.0;
  double gravity_mps2 = 0.0;
};

struct Geometry {
  double area_min_m = 0.0;
  double area_max_m = 0.0;
  double alt_min_m = 0.0;
  double alt_max_m = 0.0;
  double min_sep_m = 0.0;
  std::vector<Vec3> uav_initial_positions;
  std::vector<Vec3> bs_positions;
  std::vector<double> data_bits_per_bs;

  std::size_t n_uavs() const { return uav_initial_positions.size(); }
  std::size_t n_bss() const { return bs_positions.size(); }
};

enum class QuadratureMethod {
  ClosedForm,  // exact radiated-power integral for isotropic elements
  Midpoint,    // midpoint rule on the (n_theta, n_phi) grid
};

struct QuadratureGrid {
  int n_theta = 180;
  int n_phi = 360;
  friend bool operator==(const QuadratureGrid&, const QuadratureGrid&) = default;
};

struct QuadratureSettings {
  QuadratureGrid grid;
  QuadratureMethod method = QuadratureMethod::ClosedForm;
};

struct Scenario {
  RadioParams radio;
  EnergyParams energy;
  Geometry geom;
  std::uint64_t master_seed = 0;
  QuadratureSettings quadrature;
};

/// Thermal noise for a receiver of the given bandwidth (-174 dBm/Hz).
double thermal_noise_w(double bandwidth_hz);

/// Default radio constants at 2.4 GHz. gu_rx_power_w is derived from a 0.1 W
/// ground user 200 m from its BS over a pure-LoS link.
RadioParams default_radio_params();

/// Rotary-wing constants (P1 = 79.8563 W, P2 = 88.6279 W, ...).
EnergyParams default_energy_params();

/// 100 m x 100 m area, altitudes [75, 95] m, eight BSs on a 250 m ring around
/// the area centre, UAV start positions drawn uniformly with min-separation
/// rejection sampling. Throws std::runtime_error if placement fails within
/// 10^4 attempts.
Scenario build_default_scenario(std::size_t n_uavs, std::uint64_t seed);

inline constexpr double kDefaultBsRingRadiusM = 150.0;
inline constexpr std::size_t kDefaultBsCount = 8;

struct Violation {
  std::string path;
  std::string message;
};

/// Every violated scenario invariant, each tagged with the offending field path.
std::vector<Violation> validate(const Scenario& scenario);

}  // namespace vaacb
