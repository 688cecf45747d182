#pragma once

#include <cstdint>
#include <random>

namespace vaacb {

/// Seeded 64-bit Mersenne Twister with distribution code written out so that
/// sequences do not depend on the standard library's distribution choices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0,1) with 53 bits of mantissa.
  double canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0,1).
  double open01() {
    double u;
    do {
      u = canonical();
    } while (u == 0.0);
    return u;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % n);
  }

  /// Derive an independent child seed (splitmix64 of a counter).
  std::uint64_t fork_seed() {
    std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vaacb
