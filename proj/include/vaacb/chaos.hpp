#pragma once

#include <cstdint>

namespace vaacb {

enum class ChaosKind { GaussMouse, Logistic, Chebyshev };

/// One-dimensional chaotic map used as a deterministic driver for the
/// evolutionary operators. Every call to next() advances the map once and
/// returns a value normalized to [0,1] (Logistic: open interval (0,1)).
///
/// GaussMouse:  G' = 1 if G == 0, frac(1/G) otherwise.
/// Logistic:    x' = r x (1 - x), r = 4 by default.
/// Chebyshev:   x' = cos(a acos x), a = 4 by default; emitted as (x' + 1) / 2.
class ChaoticStream {
 public:
  /// Throws std::invalid_argument for a Logistic seed outside (0,1) or on one
  /// of the collapsing points {0, 0.25, 0.5, 0.75, 1}, or a Chebyshev seed
  /// outside [-1,1].
  ChaoticStream(ChaosKind kind, double initial_state, double param = 4.0);

  static ChaoticStream gauss_mouse(double initial_state) { return {ChaosKind::GaussMouse, initial_state}; }
  static ChaoticStream logistic(double initial_state, double r = 4.0) { return {ChaosKind::Logistic, initial_state, r}; }
  static ChaoticStream chebyshev(double initial_state, double a = 4.0) { return {ChaosKind::Chebyshev, initial_state, a}; }

  double next();

  ChaosKind kind() const { return kind_; }
  double state() const { return state_; }
  double param() const { return param_; }
  std::uint64_t emitted() const { return emitted_; }

 private:
  double gauss_mouse_next();
  double logistic_next();
  double chebyshev_next();

  ChaosKind kind_;
  double state_;
  double param_;
  std::uint64_t emitted_ = 0;
};

}  // namespace vaacb
