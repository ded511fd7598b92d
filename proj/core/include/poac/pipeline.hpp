#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "poac/codec.hpp"
#include "poac/image.hpp"
#include "poac/metrics.hpp"
#include "poac/noise.hpp"
#include "poac/shrinkage.hpp"
#include "poac/wavelet.hpp"

namespace poac {

struct BenchConfig {
  std::filesystem::path input;
  std::filesystem::path reference;  // second image for `metrics`
  std::filesystem::path out_dir = ".";
  Wavelet wavelet = Wavelet::DB1;
  double noise_sigma = 0.1;  // normalized scale; variance 0.01
  double noise_mean = 0.0;
  std::uint64_t seed = 42;
  ThresholdMode mode = ThresholdMode::Soft;
  CodecKind codec = CodecKind::Poac;

  NoiseParams noise() const { return {noise_mean, noise_sigma, seed}; }
};

// ---------------------------------------------------------------------------
// In-memory experiments

struct DenoiseResult {
  Image noisy;
  Image st;
  Image ht;
  Image poac;
  QualityReport noisy_report;
  QualityReport st_report;
  QualityReport ht_report;
  QualityReport poac_report;
};

/// Adds noise to `clean` and denoises it with soft, hard and projection
/// methods; all reports are against `clean`.
DenoiseResult denoise_experiment(const Image& clean, const BenchConfig& config);

struct CompressedMethod {
  CompressedBlob blob;
  std::vector<std::uint8_t> bytes;
  Image decoded;
  QualityReport report;  // cr and pss always set
};

struct CompressResult {
  CompressedMethod st;
  CompressedMethod ht;
  CompressedMethod poac;
};

/// Compresses the clean image with each coder.
CompressResult compress_experiment(const Image& clean, Wavelet id);

enum class HistState { Pre, Soft, Hard, Poac };
inline constexpr std::array<HistState, 4> kHistStates{HistState::Pre, HistState::Soft,
                                                      HistState::Hard, HistState::Poac};
inline constexpr std::array<SubbandLabel, 4> kSubbandLabels{
    SubbandLabel::LL, SubbandLabel::LH, SubbandLabel::HL, SubbandLabel::HH};

std::string_view hist_state_name(HistState state) noexcept;

/// histograms[state][subband], 256 bins each. Pre/soft/hard bins span each
/// subband's own range; projection details reuse the LL edges scaled by
/// their scalar, so their counts equal the LL counts.
struct HistogramSet {
  std::array<std::array<HistogramData, 4>, 4> histograms;
  PoacScalars scalars;

  const HistogramData& at(HistState state, SubbandLabel label) const {
    return histograms[static_cast<std::size_t>(state)][static_cast<std::size_t>(label)];
  }
};

HistogramSet histogram_experiment(const Image& image, Wavelet id);

// ---------------------------------------------------------------------------
// CSV rendering: '.' decimal, ',' delimiter, LF endings, 6 significant digits.

std::string format_number(double value);
std::string table1_csv(const DenoiseResult& result);
std::string table2_csv(const CompressResult& result);
std::string histogram_csv(const HistogramData& hist);
std::string quality_csv(const QualityReport& report);

// ---------------------------------------------------------------------------
// Subcommands. Each reads config.input and writes into config.out_dir.

/// noisy.pgm, st.pgm, ht.pgm, poac.pgm, table1.csv
DenoiseResult run_denoise(const BenchConfig& config);
/// st.poac, ht.poac, poac.poac, st_decoded.pgm, ht_decoded.pgm,
/// poac_decoded.pgm, table2.csv
CompressResult run_compress(const BenchConfig& config);
/// hist_<state>_<subband>.csv for the noisy image (clean when sigma = 0)
HistogramSet run_hist(const BenchConfig& config);
/// noisy.pgm; returns its path
std::filesystem::path run_noise(const BenchConfig& config);
/// <stem>.poac using config.codec; returns its path
std::filesystem::path run_encode(const BenchConfig& config);
/// <stem>.pgm from a .poac input; returns its path
std::filesystem::path run_decode(const BenchConfig& config);
/// input vs reference
QualityReport run_metrics(const BenchConfig& config);

}  // namespace poac
