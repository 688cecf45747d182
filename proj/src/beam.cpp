#include "vaacb/beam.hpp"

#include <cmath>
#include <stdexcept>

namespace vaacb {

Direction direction_to(const Vec3& from, const Vec3& to) {
  const Vec3 v = to - from;
  const double r = norm(v);
  if (r == 0.0) return {0.0, 0.0};
  double phi = std::atan2(v.y, v.x);
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  return {std::acos(std::fmax(-1.0, std::fmin(1.0, v.z / r))), phi};
}

void BeamSnapshot::check() const {
  if (positions.empty()) throw std::invalid_argument("snapshot needs at least one element");
  if (positions.size() != weights.size()) throw std::invalid_argument("snapshot positions and weights differ in size");
  if (!(wavelength_m > 0.0)) throw std::invalid_argument("snapshot wavelength must be positive");
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("snapshot weights must lie in [0,1]");
  }
}

Vec3 BeamSnapshot::centroid() const {
  Vec3 c;
  for (const Vec3& p : positions) c = c + p;
  return (1.0 / static_cast<double>(positions.size())) * c;
}

namespace {

Vec3 unit_vector(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

std::complex<double> af_along(const BeamSnapshot& snap, const Vec3& u) {
  const double k = 2.0 * kPi / snap.wavelength_m;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < snap.positions.size(); ++i) {
    const double phase = k * dot(snap.positions[i], u);
    re += snap.weights[i] * std::cos(phase);
    im += snap.weights[i] * std::sin(phase);
  }
  return {re, im};
}

}  // namespace

std::complex<double> array_factor(const BeamSnapshot& snap, double theta, double phi) {
  return af_along(snap, unit_vector(theta, phi));
}

double radiated_integral_midpoint(const BeamSnapshot& snap, QuadratureGrid grid) {
  const double dtheta = kPi / grid.n_theta;
  const double dphi = 2.0 * kPi / grid.n_phi;
  std::vector<double> cos_phi(grid.n_phi), sin_phi(grid.n_phi);
  for (int ip = 0; ip < grid.n_phi; ++ip) {
    const double phi = (ip + 0.5) * dphi;
    cos_phi[ip] = std::cos(phi);
    sin_phi[ip] = std::sin(phi);
  }
  double total = 0.0;
  for (int it = 0; it < grid.n_theta; ++it) {
    const double theta = (it + 0.5) * dtheta;
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    double ring = 0.0;
    for (int ip = 0; ip < grid.n_phi; ++ip) ring += std::norm(af_along(snap, {st * cos_phi[ip], st * sin_phi[ip], ct}));
    total += ring * st;
  }
  return total * dtheta * dphi;
}

double radiated_integral_exact(const BeamSnapshot& snap) {
  const double k = 2.0 * kPi / snap.wavelength_m;
  const std::size_t n = snap.positions.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += snap.weights[i] * snap.weights[i];
    for (std::size_t m = i + 1; m < n; ++m) {
      const double kd = k * distance(snap.positions[i], snap.positions[m]);
      const double sinc = kd == 0.0 ? 1.0 : std::sin(kd) / kd;
      sum += 2.0 * snap.weights[i] * snap.weights[m] * sinc;
    }
  }
  return 4.0 * kPi * sum;
}

GainPattern::GainPattern(BeamSnapshot snap, double eta, const QuadratureSettings& quadrature)
    : snap_(std::move(snap)), eta_(eta) {
  snap_.check();
  integral_ = quadrature.method == QuadratureMethod::Midpoint ? radiated_integral_midpoint(snap_, quadrature.grid)
                                                              : radiated_integral_exact(snap_);
  // The exact form can round to a tiny positive value for a zero pattern.
  double w2 = 0.0;
  for (double w : snap_.weights) w2 += w * w;
  if (w2 == 0.0 || !(integral_ > 1e-12 * 4.0 * kPi * w2)) throw std::domain_error("degenerate snapshot");
}

double GainPattern::toward(Direction dir) const {
  return 4.0 * kPi * std::norm(array_factor(snap_, dir.theta, dir.phi)) * eta_ / integral_;
}

double gain_toward(const BeamSnapshot& snap, double theta, double phi, double eta, QuadratureGrid grid) {
  return GainPattern(snap, eta, {grid, QuadratureMethod::Midpoint}).toward(theta, phi);
}

double GainField::integrate() const {
  const double dtheta = kPi / grid.n_theta;
  const double dphi = 2.0 * kPi / grid.n_phi;
  double total = 0.0;
  for (int it = 0; it < grid.n_theta; ++it) {
    double ring = 0.0;
    for (int ip = 0; ip < grid.n_phi; ++ip) ring += at(it, ip);
    total += ring * std::sin(theta_at(it));
  }
  return total * dtheta * dphi;
}

GainField sample_gain_field(const BeamSnapshot& snap, double eta, QuadratureGrid grid) {
  snap.check();
  GainField field;
  field.grid = grid;
  field.gain.resize(static_cast<std::size_t>(grid.n_theta) * grid.n_phi);
  for (int it = 0; it < grid.n_theta; ++it) {
    for (int ip = 0; ip < grid.n_phi; ++ip) {
      field.gain[static_cast<std::size_t>(it) * grid.n_phi + ip] =
          std::norm(array_factor(snap, field.theta_at(it), field.phi_at(ip)));
    }
  }
  const double integral = field.integrate();
  if (!(integral > 0.0)) throw std::domain_error("degenerate snapshot");
  const double scale = 4.0 * kPi * eta / integral;
  for (double& g : field.gain) g *= scale;
  field.total_radiated_integral = integral;
  return field;
}

}  // namespace vaacb
