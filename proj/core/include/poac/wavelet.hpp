#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "poac/image.hpp"

namespace poac {

/// Orthonormal Daubechies wavelets; the value is the number of vanishing
/// moments, which is also the byte stored in the container.
enum class Wavelet : std::uint8_t { DB1 = 1, DB2 = 2, DB4 = 4 };

std::string_view wavelet_name(Wavelet id) noexcept;
/// Accepts "db1", "db2", "db4" (case-insensitive).
Wavelet parse_wavelet(std::string_view name);
/// Validates a container byte.
Wavelet wavelet_from_byte(std::uint8_t value);

struct FilterBank {
  std::vector<double> lowpass;   // h
  std::vector<double> highpass;  // g_k = (-1)^k h_{L-1-k}

  std::size_t length() const noexcept { return lowpass.size(); }
};

/// Analysis pair for `id`: 2, 4 or 8 taps.
const FilterBank& filter_bank(Wavelet id);

struct HalfBands {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// One analysis step with periodic extension:
///   approx[m] = sum_k h[k] * x[(2m + k) mod n]
///   detail[m] = sum_k g[k] * x[(2m + k) mod n]
/// Each sum is accumulated in ascending k.
HalfBands dwt1d(std::span<const double> signal, const FilterBank& fb);

/// Transpose of dwt1d, which is its inverse for an orthonormal bank.
std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const FilterBank& fb);

/// One decomposition level. LL is the approximation; LH is lowpass along rows
/// then highpass along columns (vertical detail), HL is highpass along rows
/// then lowpass along columns (horizontal detail), HH is highpass both ways.
struct Subbands {
  Plane ll;
  Plane lh;
  Plane hl;
  Plane hh;
  Wavelet wavelet = Wavelet::DB1;
  int level = 1;

  std::size_t rows() const noexcept { return ll.rows(); }
  std::size_t cols() const noexcept { return ll.cols(); }
};

/// Rows are filtered first, then the columns of each half. Both dimensions of
/// `plane` must be even.
Subbands dwt2d_level(const Plane& plane, Wavelet id);

/// Inverse of dwt2d_level. All four planes must share one shape and `level`
/// must be 1.
Plane idwt2d_level(const Subbands& sb);

}  // namespace poac
