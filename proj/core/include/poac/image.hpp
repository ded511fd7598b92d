#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace poac {

/// 8-bit grayscale raster, row-major.
class Image {
 public:
  static constexpr int kBitDepth = 8;
  static constexpr std::uint8_t kMaxValue = 255;  // 2^B - 1

  Image() = default;
  /// Zero-filled image. Both dimensions must be positive.
  Image(std::size_t rows, std::size_t cols);
  Image(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t r, std::size_t c) const { return pixels_[r * cols_ + c]; }
  std::uint8_t& at(std::size_t r, std::size_t c) { return pixels_[r * cols_ + c]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Real-valued working plane, row-major. Values are kept finite.
class Plane {
 public:
  Plane() = default;
  Plane(std::size_t rows, std::size_t cols, double fill = 0.0);
  Plane(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& at(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  bool same_shape(const Plane& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Element-wise `factor * plane`.
Plane scaled(const Plane& plane, double factor);

/// Samples as reals, no rescaling.
Plane to_plane(const Image& image);

/// Rounds half away from zero, then clamps to [0, 255].
Image to_image(const Plane& plane);

std::uint8_t quantize_pixel(double value) noexcept;

}  // namespace poac
