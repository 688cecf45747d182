#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vaacb/geometry.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

/// Far-field direction: theta is the polar angle from +z, phi the azimuth.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
};

/// Direction of `to` as seen from `from`, phi wrapped into [0, 2pi).
Direction direction_to(const Vec3& from, const Vec3& to);

/// Geometry and excitation of the virtual antenna array for one target BS.
struct BeamSnapshot {
  std::vector<Vec3> positions;
  std::vector<double> weights;
  double wavelength_m = 0.0;

  /// Throws std::invalid_argument on size mismatch, empty array, weights
  /// outside [0,1] or a non-positive wavelength.
  void check() const;
  Vec3 centroid() const;
};

/// Complex array factor of isotropic elements:
/// sum_i I_i exp(j 2pi/lambda (x_i sin t cos p + y_i sin t sin p + z_i cos t)).
std::complex<double> array_factor(const BeamSnapshot& snap, double theta, double phi);

/// Integral of |F|^2 over the unit sphere by the midpoint rule on `grid`.
/// Summation order is fixed (theta-major) so the result is reproducible.
double radiated_integral_midpoint(const BeamSnapshot& snap, QuadratureGrid grid);

/// Exact integral of |F|^2 over the unit sphere:
/// 4pi sum_ik I_i I_k sinc(2pi/lambda |r_i - r_k|).
double radiated_integral_exact(const BeamSnapshot& snap);

/// Normalized directive gain of a snapshot with its radiated-power integral
/// computed once. Throws std::domain_error("degenerate snapshot") when the
/// integral is zero (all weights zero).
class GainPattern {
 public:
  GainPattern(BeamSnapshot snap, double eta, const QuadratureSettings& quadrature);

  /// 4pi |F(theta,phi)|^2 eta / integral.
  double toward(Direction dir) const;
  double toward(double theta, double phi) const { return toward(Direction{theta, phi}); }

  const BeamSnapshot& snapshot() const { return snap_; }
  double radiated_integral() const { return integral_; }
  double efficiency() const { return eta_; }

 private:
  BeamSnapshot snap_;
  double eta_;
  double integral_;
};

/// Gain toward (theta, phi) with the denominator from the midpoint grid.
double gain_toward(const BeamSnapshot& snap, double theta, double phi, double eta, QuadratureGrid grid);

struct GainField {
  QuadratureGrid grid;
  std::vector<double> gain;  // theta-major, n_theta * n_phi
  double total_radiated_integral = 0.0;

  double theta_at(int it) const { return (it + 0.5) * kPi / grid.n_theta; }
  double phi_at(int ip) const { return (ip + 0.5) * 2.0 * kPi / grid.n_phi; }
  double at(int it, int ip) const { return gain[static_cast<std::size_t>(it) * grid.n_phi + ip]; }

  /// Midpoint-rule integral of the sampled gain over the sphere.
  double integrate() const;
};

/// Gain on every node of `grid`, normalized by the same grid's integral of
/// |F|^2, so integrate() returns 4pi eta up to rounding.
GainField sample_gain_field(const BeamSnapshot& snap, double eta, QuadratureGrid grid);

}  // namespace vaacb
