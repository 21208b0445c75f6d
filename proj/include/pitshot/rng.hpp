#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pitshot::rng {

/// SplitMix64: tiny, portable, well-mixed 64-bit generator. Used instead of
/// std engines so Monte Carlo streams are fully pinned by this file.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Seed for an independent substream (e.g. one Monte Carlo trial): the base
/// seed and the index are mixed through the SplitMix64 output function.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return mix.next();
}

/// Standard normal deviate via the Box-Muller transform (cosine branch).
inline double standard_normal(SplitMix64& gen) {
  const double u1 = gen.uniform01();
  const double u2 = gen.uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace pitshot::rng
