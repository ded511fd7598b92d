#include "poac/noise.hpp"

#include <cmath>
#include <numbers>

#include "poac/error.hpp"

namespace poac {

double GaussianSource::next() noexcept {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  // 1 - u1 lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - rng_.next_unit();
  const double u2 = rng_.next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

Image add_gaussian(const Image& image, const NoiseParams& params) {
  if (!(params.sigma >= 0.0) || !std::isfinite(params.sigma) || !std::isfinite(params.mean)) {
    throw Error(Errc::InvalidArgument, "noise sigma must be finite and nonnegative");
  }
  GaussianSource gauss(params.seed);
  Image out = image;
  for (auto& px : out.pixels()) {
    const double n = params.mean + params.sigma * gauss.next();
    px = quantize_pixel((px / 255.0 + n) * 255.0);
  }
  return out;
}

}  // namespace poac
