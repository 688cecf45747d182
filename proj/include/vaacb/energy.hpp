#pragma once

#include <span>
#include <vector>

#include "vaacb/geometry.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

/// One UAV's move between two hover points: a horizontal phase flown at
/// speed_mps followed by a vertical phase whose energy is the signed
/// potential term.
struct FlightLeg {
  double horizontal_dist_m = 0.0;
  double alt_change_m = 0.0;
  double speed_mps = 0.0;
  double duration_s = 0.0;  // horizontal flight time D / V
};

FlightLeg make_leg(const Vec3& from, const Vec3& to, double speed_mps);

/// Rotary-wing propulsion power at forward speed v (W).
double propulsion_power(double v, const EnergyParams& ep);

/// dP/dV, used for checks and by max_range_speed.
double propulsion_power_derivative(double v, const EnergyParams& ep);

/// Speed maximizing V / P(V) on (0.1, 60] m/s, by golden-section search.
double max_range_speed(const EnergyParams& ep);

/// P(V) D/V + P(0) hover_tail_s + m g h. Kinetic energy is zero across a
/// hover-to-hover leg. Throws std::invalid_argument for a negative hover tail
/// or a non-positive speed on a leg with horizontal travel.
double leg_energy(const FlightLeg& leg, double hover_tail_s, const EnergyParams& ep);

/// Swarm move from one formation to another. The formation time is set by
/// the slowest UAV; the others hover for the remainder.
struct FormationMove {
  std::vector<FlightLeg> legs;
  std::vector<double> hover_tail_s;
  std::vector<double> energy_j;
  double formation_time_s = 0.0;
  double total_energy_j = 0.0;
};

FormationMove plan_formation_move(std::span<const Vec3> from, std::span<const Vec3> to, double speed_mps,
                                  const EnergyParams& ep);

class EnergyMatrix {
 public:
  explicit EnergyMatrix(std::size_t n) : n_(n), joules_(n * n, 0.0) {}
  std::size_t size() const { return n_; }
  double operator()(std::size_t from, std::size_t to) const { return joules_[from * n_ + to]; }
  double& operator()(std::size_t from, std::size_t to) { return joules_[from * n_ + to]; }

  /// Sum of consecutive entries along `order`.
  double tour_cost(std::span<const int> order) const;

 private:
  std::size_t n_;
  std::vector<double> joules_;
};

/// Entry (a, b) is the swarm energy to move from formation a to formation b
/// at the maximum-range speed. Throws std::invalid_argument when formations
/// hold different UAV counts.
EnergyMatrix energy_matrix(const std::vector<std::vector<Vec3>>& formations, const EnergyParams& ep);

}  // namespace vaacb
