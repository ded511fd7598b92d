#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "poac/huffman.hpp"
#include "poac/image.hpp"
#include "poac/projection.hpp"
#include "poac/shrinkage.hpp"
#include "poac/wavelet.hpp"

namespace poac {

// On-disk container (".poac"), all integers and doubles little-endian:
//
//   offset  size  field
//   0       4     magic "POAC"
//   4       1     version (1)
//   5       1     codec kind: 1 = POAC, 2 = soft threshold, 3 = hard threshold
//   6       1     wavelet: 1, 2 or 4
//   7       4     rows of the original image (u32)
//   11      4     cols of the original image (u32)
//   15      16    quant_min, quant_step (f64 each); threshold kinds store four
//                 such pairs, in LL, LH, HL, HH order (64 bytes)
//   ..      24    s_lh, s_hl, s_hh (f64, POAC kind only)
//   ..      256   canonical Huffman code length per symbol
//   ..      8     payload bit count (u64)
//   ..      *     payload, MSB-first, zero-padded to a byte boundary

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kPoacHeaderSize = 319;
inline constexpr std::size_t kThresholdHeaderSize = 343;

enum class CodecKind : std::uint8_t { Poac = 1, SoftThreshold = 2, HardThreshold = 3 };

/// Uniform 8-bit quantization of a plane. value = minimum + code * step.
struct QuantizedPlane {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> codes;
  double minimum = 0.0;
  double step = 1.0;
};

/// minimum = min(plane), step = (max - min) / 255, or 1 for a constant plane.
QuantizedPlane quantize_uniform(const Plane& plane);
Plane dequantize(const QuantizedPlane& q);

struct QuantRange {
  double minimum = 0.0;
  double step = 1.0;

  friend bool operator==(const QuantRange&, const QuantRange&) = default;
};

struct CompressedBlob {
  CodecKind kind = CodecKind::Poac;
  Wavelet wavelet = Wavelet::DB1;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<QuantRange> ranges;  // one for POAC, four for threshold kinds
  PoacScalars scalars;             // POAC only
  CodeLengths code_lengths{};
  std::uint64_t bit_count = 0;
  std::vector<std::uint8_t> payload;
};

std::vector<std::uint8_t> serialize_blob(const CompressedBlob& blob);
CompressedBlob parse_blob(std::span<const std::uint8_t> bytes);

/// Serialized length in bytes.
std::size_t blob_size(const CompressedBlob& blob);

/// Stores LL (quantized, Huffman coded) plus the three projection scalars.
CompressedBlob poac_encode(const Image& image, Wavelet id);
Image poac_decode(const CompressedBlob& blob);

/// Baseline coder: thresholds the details, quantizes all four subbands
/// independently and Huffman codes the concatenated symbols.
CompressedBlob threshold_encode(const Image& image, Wavelet id, ThresholdMode mode);
Image threshold_decode(const CompressedBlob& blob);

/// Dispatches on blob.kind.
Image decode_blob(const CompressedBlob& blob);

}  // namespace poac
