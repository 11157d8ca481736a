#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace polar {

/// Seedable generator used everywhere randomness is needed: std::mt19937_64
/// with doubles built from the top 53 bits, so streams are reproducible
/// across standard libraries (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double exponential() { return -std::log1p(-uniform()); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace polar
