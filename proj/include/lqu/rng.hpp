#pragma once

#include <cstdint>
#include <random>

namespace lqu {

/// Seeded normal-variate source with a pinned algorithm: std::mt19937_64
/// (bit-exact across conforming standard libraries) feeding a hand-rolled
/// Box-Muller transform, so sequences do not depend on the library's
/// std::normal_distribution.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace lqu
