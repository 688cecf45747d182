#include "vaacb/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace vaacb {

LinkGeometry link_geometry(const Vec3& vaa, const Vec3& bs) {
  if (!(vaa.z > bs.z)) throw std::invalid_argument("link geometry needs the VAA above the BS");
  LinkGeometry link;
  link.d2_m = horizontal_distance(vaa, bs);
  link.h_m = vaa.z - bs.z;
  link.d3_m = std::hypot(link.d2_m, link.h_m);
  const double ratio = link.d2_m > 0.0 ? std::fmin(1.0, link.h_m / link.d2_m) : 1.0;
  link.elevation_deg = 180.0 / kPi * std::asin(std::fmax(0.0, ratio));
  return link;
}

double los_probability(double elevation_deg, double k1, double k2) {
  return 1.0 / (1.0 + k1 * std::exp(-k2 * (elevation_deg - k1)));
}

double channel_gain(double distance_m, double p_los, const RadioParams& radio) {
  const double attenuation = radio.xi_los * p_los + radio.xi_nlos * (1.0 - p_los);
  return 1.0 / (radio.pathloss_const * std::pow(distance_m, radio.pathloss_exp) * attenuation);
}

double channel_gain(const LinkGeometry& link, const RadioParams& radio) {
  return channel_gain(link.d3_m, los_probability(link.elevation_deg, radio.k1, radio.k2), radio);
}

double received_power(const GainPattern& pattern, Direction bs_direction, const LinkGeometry& link,
                      const RadioParams& radio) {
  if (!(link.d3_m > 0.0)) throw std::invalid_argument("received power needs a positive link distance");
  return radio.tx_power_w * pattern.toward(bs_direction) * channel_gain(link, radio);
}

double rate(double p_rx_w, const RadioParams& radio) {
  return radio.bandwidth_hz * std::log2(1.0 + p_rx_w / radio.noise_power_w);
}

double interfered_sinr(double p_interference_w, const RadioParams& radio) {
  return radio.gu_rx_power_w / (radio.noise_power_w + p_interference_w);
}

}  // namespace vaacb
