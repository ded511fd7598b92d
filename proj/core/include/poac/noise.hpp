#pragma once

#include <cstdint>
#include <optional>

#include "poac/image.hpp"

namespace poac {

/// Gaussian noise parameters on the normalized [0, 1] intensity scale.
struct NoiseParams {
  double mean = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 42;
};

/// SplitMix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Top 53 bits mapped to [0, 1).
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Standard normal draws via Box-Muller. Each pair of uniforms (u1, u2)
/// yields r*cos(2*pi*u2) then r*sin(2*pi*u2) with r = sqrt(-2 ln(1 - u1)),
/// so both outputs are consumed in that order.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) noexcept : rng_(seed) {}

  double next() noexcept;

 private:
  SplitMix64 rng_;
  std::optional<double> spare_;
};

/// Adds N(mean, sigma^2) noise to every pixel in row-major order:
/// p -> round((p / 255 + n) * 255), clamped to [0, 255].
Image add_gaussian(const Image& image, const NoiseParams& params);

}  // namespace poac
