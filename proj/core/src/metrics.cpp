#include "poac/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "poac/error.hpp"

namespace poac {

double mse(const Image& a, const Image& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "images differ in size: " + std::to_string(a.rows()) +
                                             "x" + std::to_string(a.cols()) + " vs " +
                                             std::to_string(b.rows()) + "x" +
                                             std::to_string(b.cols()));
  }
  if (a.size() == 0) throw Error(Errc::EmptyInput, "mse of empty images");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a.pixels()[i]) - static_cast<double>(b.pixels()[i]);
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double psnr_from_mse(double mse_value) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kMaxIntensity * kMaxIntensity / mse_value);
}

double psnr(const Image& a, const Image& b) { return psnr_from_mse(mse(a, b)); }

double compression_ratio(std::uint64_t uncompressed_bytes, std::uint64_t compressed_bytes) {
  if (uncompressed_bytes == 0 || compressed_bytes == 0) {
    throw Error(Errc::InvalidArgument, "sizes must be positive");
  }
  return static_cast<double>(uncompressed_bytes) / static_cast<double>(compressed_bytes);
}

double percent_space_savings(double cr) {
  if (!(cr > 0.0)) throw Error(Errc::InvalidArgument, "compression ratio must be positive");
  return (1.0 - 1.0 / cr) * 100.0;
}

QualityReport quality_report(const Image& original, const Image& processed) {
  QualityReport r;
  r.mse = mse(original, processed);
  r.psnr = psnr_from_mse(r.mse);
  return r;
}

QualityReport quality_report(const Image& original, const Image& processed,
                             std::uint64_t compressed_bytes) {
  QualityReport r = quality_report(original, processed);
  r.cr = compression_ratio(original.size(), compressed_bytes);
  r.pss = percent_space_savings(*r.cr);
  return r;
}

std::string_view subband_name(SubbandLabel label) noexcept {
  switch (label) {
    case SubbandLabel::LL: return "LL";
    case SubbandLabel::LH: return "LH";
    case SubbandLabel::HL: return "HL";
    case SubbandLabel::HH: return "HH";
  }
  return "??";
}

std::uint64_t HistogramData::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

namespace {

// Binning keys: the edges themselves when ascending, their negation when
// descending, so both orientations reduce to half-open [k_j, k_j+1) bins.
struct BinKeys {
  std::vector<double> keys;
  bool ascending = true;

  explicit BinKeys(std::span<const double> edges) : keys(edges.begin(), edges.end()) {
    if (edges.size() < 2) throw Error(Errc::InvalidArgument, "need at least two bin edges");
    if (edges.front() == edges.back()) {
      throw Error(Errc::InvalidArgument, "bin edges span an empty range");
    }
    ascending = edges.front() < edges.back();
    if (!ascending) {
      for (double& e : keys) e = -e;
    }
    if (!std::is_sorted(keys.begin(), keys.end())) {
      throw Error(Errc::InvalidArgument, "bin edges must be monotone");
    }
  }

  std::size_t bins() const { return keys.size() - 1; }

  // Unclamped index; -1 below the range, bins() above it.
  std::ptrdiff_t locate(double v) const {
    const double key = ascending ? v : -v;
    if (key == keys.back()) return static_cast<std::ptrdiff_t>(bins()) - 1;
    return std::upper_bound(keys.begin(), keys.end(), key) - keys.begin() - 1;
  }
};

}  // namespace

std::optional<std::size_t> HistogramData::zero_bin() const {
  const BinKeys keys(bin_edges);
  const auto bin = keys.locate(0.0);
  if (bin < 0 || bin >= static_cast<std::ptrdiff_t>(keys.bins())) return std::nullopt;
  return static_cast<std::size_t>(bin);
}

HistogramData histogram_over_edges(const Plane& plane, std::span<const double> edges,
                                   SubbandLabel label) {
  const BinKeys keys(edges);
  HistogramData h;
  h.bin_edges.assign(edges.begin(), edges.end());
  h.counts.assign(keys.bins(), 0);
  h.label = label;
  const auto last = static_cast<std::ptrdiff_t>(keys.bins()) - 1;
  for (double v : plane.values()) {
    ++h.counts[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(keys.locate(v), 0, last))];
  }
  return h;
}

HistogramData subband_histogram(const Plane& plane, std::size_t bins, SubbandLabel label) {
  if (plane.empty()) throw Error(Errc::EmptyInput, "histogram of an empty plane");
  if (bins == 0) throw Error(Errc::InvalidArgument, "bin count must be positive");
  const auto [mn, mx] = std::minmax_element(plane.values().begin(), plane.values().end());
  double lo = *mn;
  double hi = *mx;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(bins + 1);
  for (std::size_t k = 0; k < bins; ++k) {
    edges[k] = lo + (hi - lo) * (static_cast<double>(k) / static_cast<double>(bins));
  }
  edges[bins] = hi;
  return histogram_over_edges(plane, edges, label);
}

std::vector<double> scale_edges(std::span<const double> edges, double factor) {
  std::vector<double> out(edges.size());
  std::transform(edges.begin(), edges.end(), out.begin(), [factor](double e) { return factor * e; });
  return out;
}

}  // namespace poac
