#include "vaacb/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vaacb {

FlightLeg make_leg(const Vec3& from, const Vec3& to, double speed_mps) {
  FlightLeg leg;
  leg.horizontal_dist_m = horizontal_distance(from, to);
  leg.alt_change_m = to.z - from.z;
  leg.speed_mps = speed_mps;
  leg.duration_s = leg.horizontal_dist_m > 0.0 ? leg.horizontal_dist_m / speed_mps : 0.0;
  return leg;
}

double propulsion_power(double v, const EnergyParams& ep) {
  const double v2 = v * v;
  const double v02 = ep.v0_mps * ep.v0_mps;
  const double blade = ep.p1_w * (1.0 + 3.0 * v2 / (ep.v_tip_mps * ep.v_tip_mps));
  const double induced = ep.p2_w * std::sqrt(std::sqrt(1.0 + v2 * v2 / (4.0 * v02 * v02)) - v2 / (2.0 * v02));
  const double parasite = 0.5 * ep.air_density * ep.d0 * ep.s * ep.rotor_area_m2 * v2 * v;
  return blade + induced + parasite;
}

double propulsion_power_derivative(double v, const EnergyParams& ep) {
  const double v02 = ep.v0_mps * ep.v0_mps;
  const double root = std::sqrt(1.0 + v * v * v * v / (4.0 * v02 * v02));
  const double inner = root - v * v / (2.0 * v02);
  const double d_inner = (v * v * v / (2.0 * v02 * v02)) / root - v / v02;
  return ep.p1_w * 6.0 * v / (ep.v_tip_mps * ep.v_tip_mps) + ep.p2_w * 0.5 * d_inner / std::sqrt(inner) +
         1.5 * ep.air_density * ep.d0 * ep.s * ep.rotor_area_m2 * v * v;
}

double max_range_speed(const EnergyParams& ep) {
  auto range_per_joule = [&](double v) { return v / propulsion_power(v, ep); };
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.1;
  double hi = 60.0;
  double a = hi - kInvPhi * (hi - lo);
  double b = lo + kInvPhi * (hi - lo);
  double fa = range_per_joule(a);
  double fb = range_per_joule(b);
  while (hi - lo > 1e-9) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + kInvPhi * (hi - lo);
      fb = range_per_joule(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - kInvPhi * (hi - lo);
      fa = range_per_joule(a);
    }
  }
  const double mid = 0.5 * (lo + hi);
  return range_per_joule(hi) > range_per_joule(mid) ? hi : mid;
}

double leg_energy(const FlightLeg& leg, double hover_tail_s, const EnergyParams& ep) {
  if (hover_tail_s < 0.0) throw std::invalid_argument("hover tail must be non-negative");
  if (leg.horizontal_dist_m < 0.0) throw std::invalid_argument("horizontal distance must be non-negative");
  double e = 0.0;
  if (leg.horizontal_dist_m > 0.0) {
    if (!(leg.speed_mps > 0.0)) throw std::invalid_argument("a leg with horizontal travel needs a positive speed");
    e += propulsion_power(leg.speed_mps, ep) * (leg.horizontal_dist_m / leg.speed_mps);
  }
  e += propulsion_power(0.0, ep) * hover_tail_s;
  e += ep.uav_mass_kg * ep.gravity_mps2 * leg.alt_change_m;
  return e;
}

FormationMove plan_formation_move(std::span<const Vec3> from, std::span<const Vec3> to, double speed_mps,
                                  const EnergyParams& ep) {
  if (from.size() != to.size()) throw std::invalid_argument("formations hold different UAV counts");
  FormationMove move;
  move.legs.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    move.legs.push_back(make_leg(from[i], to[i], speed_mps));
    move.formation_time_s = std::max(move.formation_time_s, move.legs.back().duration_s);
  }
  for (const FlightLeg& leg : move.legs) {
    const double tail = move.formation_time_s - leg.duration_s;
    const double e = leg_energy(leg, tail, ep);
    move.hover_tail_s.push_back(tail);
    move.energy_j.push_back(e);
    move.total_energy_j += e;
  }
  return move;
}

double EnergyMatrix::tour_cost(std::span<const int> order) const {
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) total += (*this)(order[j], order[j + 1]);
  return total;
}

EnergyMatrix energy_matrix(const std::vector<std::vector<Vec3>>& formations, const EnergyParams& ep) {
  EnergyMatrix m(formations.size());
  if (formations.empty()) return m;
  const std::size_t n_uavs = formations.front().size();
  for (const auto& f : formations) {
    if (f.size() != n_uavs) throw std::invalid_argument("formations hold different UAV counts");
  }
  const double v = max_range_speed(ep);
  for (std::size_t a = 0; a < formations.size(); ++a) {
    for (std::size_t b = 0; b < formations.size(); ++b) {
      if (a != b) m(a, b) = plan_formation_move(formations[a], formations[b], v, ep).total_energy_j;
    }
  }
  return m;
}

}  // namespace vaacb
