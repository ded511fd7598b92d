#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "poac/image.hpp"

namespace poac {

inline constexpr double kMaxIntensity = 255.0;

/// Mean squared difference in 8-bit pixel units.
double mse(const Image& a, const Image& b);

/// 10 log10(255^2 / mse). Identical images give +infinity, which callers
/// render as "inf".
double psnr(const Image& a, const Image& b);
double psnr_from_mse(double mse_value);

/// uncompressed / compressed.
double compression_ratio(std::uint64_t uncompressed_bytes, std::uint64_t compressed_bytes);

/// (1 - 1/cr) * 100.
double percent_space_savings(double cr);

struct QualityReport {
  double mse = 0.0;
  double psnr = 0.0;  // +inf when mse == 0
  std::optional<double> cr;
  std::optional<double> pss;
  double max_i = kMaxIntensity;
};

QualityReport quality_report(const Image& original, const Image& processed);
QualityReport quality_report(const Image& original, const Image& processed,
                             std::uint64_t compressed_bytes);

enum class SubbandLabel { LL, LH, HL, HH };
std::string_view subband_name(SubbandLabel label) noexcept;

struct HistogramData {
  std::vector<double> bin_edges;      // bins + 1 monotone edges
  std::vector<std::uint64_t> counts;  // bins
  SubbandLabel label = SubbandLabel::LL;

  std::uint64_t total() const noexcept;
  /// Bin whose interval contains 0, if any.
  std::optional<std::size_t> zero_bin() const;
};

/// `bins` uniform bins spanning [min, max] of the plane. A constant plane
/// spans [c - 0.5, c + 0.5], so its values land in the middle bin.
HistogramData subband_histogram(const Plane& plane, std::size_t bins = 256,
                                SubbandLabel label = SubbandLabel::LL);

/// Bins `plane` against explicit edges. Ascending edges give half-open bins
/// [e_j, e_j+1); descending edges give (e_j+1, e_j], the mirror image, so a
/// negatively scaled plane lands in the same bins as the original. The last
/// bin is closed on both sides. Out-of-range values go to the end bins.
HistogramData histogram_over_edges(const Plane& plane, std::span<const double> edges,
                                   SubbandLabel label);

/// Edges multiplied by `factor`: the bin map for a plane scaled by `factor`.
std::vector<double> scale_edges(std::span<const double> edges, double factor);

}  // namespace poac
