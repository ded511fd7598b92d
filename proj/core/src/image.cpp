#include "poac/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "poac/error.hpp"

namespace poac {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(Errc::ZeroDimension,
                "image dimensions must be positive, got " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

}  // namespace

Image::Image(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  pixels_.assign(rows * cols, 0);
}

Image::Image(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  check_dims(rows, cols);
  if (pixels_.size() != rows * cols) {
    throw Error(Errc::LengthMismatch, "pixel count " + std::to_string(pixels_.size()) +
                                          " does not match " + std::to_string(rows) + "x" +
                                          std::to_string(cols));
  }
}

Plane::Plane(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {
  if (!std::isfinite(fill)) throw Error(Errc::InvalidArgument, "plane fill value must be finite");
}

Plane::Plane(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    throw Error(Errc::LengthMismatch, "value count " + std::to_string(values_.size()) +
                                          " does not match " + std::to_string(rows) + "x" +
                                          std::to_string(cols));
  }
  if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(Errc::InvalidArgument, "plane values must be finite");
  }
}

Plane scaled(const Plane& plane, double factor) {
  Plane out(plane.rows(), plane.cols());
  auto src = plane.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = factor * src[i];
  return out;
}

Plane to_plane(const Image& image) {
  Plane out(image.rows(), image.cols());
  std::copy(image.pixels().begin(), image.pixels().end(), out.values().begin());
  return out;
}

std::uint8_t quantize_pixel(double value) noexcept {
  const double r = std::round(value);  // half away from zero
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

Image to_image(const Plane& plane) {
  Image out(plane.rows(), plane.cols());
  std::transform(plane.values().begin(), plane.values().end(), out.pixels().begin(),
                 quantize_pixel);
  return out;
}

}  // namespace poac
