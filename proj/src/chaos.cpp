#include "vaacb/chaos.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace vaacb {

namespace {

constexpr std::array<double, 5> kLogisticCollapse{0.0, 0.25, 0.5, 0.75, 1.0};

bool logistic_admissible(double x) {
  if (!(x > 0.0 && x < 1.0)) return false;
  for (double p : kLogisticCollapse) {
    if (x == p) return false;
  }
  return true;
}

}  // namespace

ChaoticStream::ChaoticStream(ChaosKind kind, double initial_state, double param)
    : kind_(kind), state_(initial_state), param_(param) {
  if (!std::isfinite(initial_state)) throw std::invalid_argument("chaotic stream seed must be finite");
  switch (kind_) {
    case ChaosKind::Logistic:
      if (!logistic_admissible(initial_state))
        throw std::invalid_argument("logistic seed must lie in (0,1) and avoid {0.25, 0.5, 0.75}");
      if (!(param > 0.0 && param <= 4.0)) throw std::invalid_argument("logistic growth rate must lie in (0,4]");
      break;
    case ChaosKind::Chebyshev:
      if (initial_state < -1.0 || initial_state > 1.0) throw std::invalid_argument("chebyshev seed must lie in [-1,1]");
      break;
    case ChaosKind::GaussMouse:
      break;
  }
}

double ChaoticStream::next() {
  ++emitted_;
  switch (kind_) {
    case ChaosKind::GaussMouse: return gauss_mouse_next();
    case ChaosKind::Logistic: return logistic_next();
    case ChaosKind::Chebyshev: return chebyshev_next();
  }
  return 0.0;
}

double ChaoticStream::gauss_mouse_next() {
  if (state_ == 0.0) {
    state_ = 1.0;
  } else {
    const double inv = 1.0 / state_;
    state_ = inv - std::floor(inv);
  }
  return state_;
}

double ChaoticStream::logistic_next() {
  double x = param_ * state_ * (1.0 - state_);
  // Rounding near x = 0.5 can land exactly on 1 (and then 0 forever); step
  // off the collapse set deterministically so the orbit stays in (0,1).
  if (!logistic_admissible(x)) x = std::fmod(state_ + 0.6180339887498949, 1.0);
  if (!logistic_admissible(x)) x = 0.1234567890123;
  state_ = x;
  return state_;
}

double ChaoticStream::chebyshev_next() {
  const double raw = std::cos(param_ * std::acos(state_));
  state_ = std::fmax(-1.0, std::fmin(1.0, raw));
  return 0.5 * (state_ + 1.0);
}

}  // namespace vaacb
