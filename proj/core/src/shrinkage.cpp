#include "poac/shrinkage.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "poac/error.hpp"

namespace poac {

namespace {

constexpr double kMadScale = 0.6745;

void check_lambda(double lambda) {
  if (!(lambda >= 0.0)) throw Error(Errc::InvalidArgument, "threshold must be nonnegative");
}

}  // namespace

std::string_view mode_name(ThresholdMode mode) noexcept {
  return mode == ThresholdMode::Hard ? "hard" : "soft";
}

ThresholdMode parse_mode(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "hard") return ThresholdMode::Hard;
  if (lower == "soft") return ThresholdMode::Soft;
  throw Error(Errc::InvalidArgument, "unknown threshold mode '" + std::string(name) + "'");
}

double mad_sigma(const Plane& coeffs) {
  if (coeffs.empty()) throw Error(Errc::EmptyInput, "median of an empty plane");
  std::vector<double> mags(coeffs.size());
  std::transform(coeffs.values().begin(), coeffs.values().end(), mags.begin(),
                 [](double v) { return std::abs(v); });
  const std::size_t n = mags.size();
  const auto upper = mags.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(mags.begin(), upper, mags.end());
  double median = *upper;
  if (n % 2 == 0) {
    const double lower = *std::max_element(mags.begin(), upper);
    median = (lower + median) / 2.0;
  }
  return median / kMadScale;
}

double universal_threshold(double delta, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "coefficient count must be positive");
  if (!(delta >= 0.0)) throw Error(Errc::InvalidArgument, "noise estimate must be nonnegative");
  return delta * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

Plane hard_threshold(const Plane& coeffs, double lambda) {
  check_lambda(lambda);
  Plane out = coeffs;
  for (double& v : out.values()) {
    if (std::abs(v) <= lambda) v = 0.0;
  }
  return out;
}

Plane soft_threshold(const Plane& coeffs, double lambda) {
  check_lambda(lambda);
  Plane out = coeffs;
  for (double& v : out.values()) {
    const double shrunk = std::abs(v) - lambda;
    v = shrunk > 0.0 ? std::copysign(shrunk, v) : 0.0;
  }
  return out;
}

Plane apply_threshold(const Plane& coeffs, double lambda, ThresholdMode mode) {
  return mode == ThresholdMode::Hard ? hard_threshold(coeffs, lambda)
                                     : soft_threshold(coeffs, lambda);
}

ShrinkageParams estimate_shrinkage(const Plane& detail, ThresholdMode mode) {
  ShrinkageParams p;
  p.delta_mad = mad_sigma(detail);
  p.n_coeffs = detail.size();
  p.lambda = universal_threshold(p.delta_mad, p.n_coeffs);
  p.mode = mode;
  return p;
}

Subbands shrink_subbands(const Subbands& sb, ThresholdMode mode) {
  auto shrink = [mode](const Plane& d) {
    return apply_threshold(d, estimate_shrinkage(d, mode).lambda, mode);
  };
  return Subbands{sb.ll, shrink(sb.lh), shrink(sb.hl), shrink(sb.hh), sb.wavelet, sb.level};
}

Image shrink_denoise(const Image& image, Wavelet id, ThresholdMode mode) {
  const Subbands sb = dwt2d_level(to_plane(image), id);
  return to_image(idwt2d_level(shrink_subbands(sb, mode)));
}

}  // namespace poac
