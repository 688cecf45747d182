#pragma once

#include "vaacb/beam.hpp"
#include "vaacb/geometry.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

struct LinkGeometry {
  double d3_m = 0.0;
  double d2_m = 0.0;
  double h_m = 0.0;
  double elevation_deg = 0.0;
};

/// Distances and elevation from the VAA reference point to a BS. The
/// elevation follows asin(h / d2) in degrees with the argument clamped to
/// [0,1], so d2 <= h yields 90 degrees. Requires vaa.z > bs.z.
LinkGeometry link_geometry(const Vec3& vaa_ref_point, const Vec3& bs);

/// [1 + k1 exp(-k2 (elevation - k1))]^-1, elevation in degrees.
double los_probability(double elevation_deg, double k1, double k2);

/// [k0 d^alpha (xi_los p + xi_nlos (1 - p))]^-1 for an explicit LoS probability.
double channel_gain(double distance_m, double p_los, const RadioParams& radio);

/// Channel power gain with the LoS probability taken from the link elevation.
double channel_gain(const LinkGeometry& link, const RadioParams& radio);

/// P_t * G * g.
double received_power(const GainPattern& pattern, Direction bs_direction, const LinkGeometry& link,
                      const RadioParams& radio);

/// Shannon rate B log2(1 + p / sigma^2), bits/s.
double rate(double p_rx_w, const RadioParams& radio);

/// P_GU / (sigma^2 + interference), linear.
double interfered_sinr(double p_interference_w, const RadioParams& radio);

inline double to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace vaacb
