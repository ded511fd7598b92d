#pragma once

#include <cstddef>
#include <string_view>

#include "poac/image.hpp"
#include "poac/wavelet.hpp"

namespace poac {

enum class ThresholdMode { Hard, Soft };

std::string_view mode_name(ThresholdMode mode) noexcept;
/// "hard" or "soft".
ThresholdMode parse_mode(std::string_view name);

struct ShrinkageParams {
  double delta_mad = 0.0;
  double lambda = 0.0;
  std::size_t n_coeffs = 1;
  ThresholdMode mode = ThresholdMode::Soft;
};

/// Robust noise estimate median(|c|) / 0.6745. An even count uses the mean of
/// the two central order statistics.
double mad_sigma(const Plane& coeffs);

/// delta * sqrt(2 ln n).
double universal_threshold(double delta, std::size_t n);

/// Zeroes every coefficient with |c| <= lambda.
Plane hard_threshold(const Plane& coeffs, double lambda);

/// sign(c) * max(|c| - lambda, 0).
Plane soft_threshold(const Plane& coeffs, double lambda);

Plane apply_threshold(const Plane& coeffs, double lambda, ThresholdMode mode);

/// MAD estimate and universal threshold for one detail subband.
ShrinkageParams estimate_shrinkage(const Plane& detail, ThresholdMode mode);

/// Thresholds LH, HL and HH, each with its own estimate; LL is copied.
Subbands shrink_subbands(const Subbands& sb, ThresholdMode mode);

/// DWT, per-subband thresholding of the details, inverse DWT.
Image shrink_denoise(const Image& image, Wavelet id, ThresholdMode mode);

}  // namespace poac
