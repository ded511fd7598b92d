#include "poac/codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "poac/error.hpp"

namespace poac {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'P', 'O', 'A', 'C'};

class Writer {
 public:
  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> b) : in_(b) {}

  std::span<const std::uint8_t> bytes(std::size_t n) {
    need(n);
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint8_t u8() { return bytes(1)[0]; }
  std::uint32_t u32() {
    auto b = bytes(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  std::uint64_t u64() {
    auto b = bytes(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }

  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) {
      throw Error(Errc::TruncatedBlob, "header needs " + std::to_string(pos_ + n) +
                                           " bytes, blob has " + std::to_string(in_.size()));
    }
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::size_t range_count(CodecKind kind) { return kind == CodecKind::Poac ? 1 : 4; }

void check_encodable(const Image& image) {
  if (image.rows() % 2 != 0 || image.cols() % 2 != 0) {
    throw Error(Errc::OddDimension, "image dimensions must be even, got " +
                                        std::to_string(image.rows()) + "x" +
                                        std::to_string(image.cols()));
  }
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (image.rows() > kMax || image.cols() > kMax) {
    throw Error(Errc::InvalidArgument, "image too large for the container");
  }
}

void validate(const CompressedBlob& blob) {
  if (blob.rows == 0 || blob.cols == 0 || blob.rows % 2 != 0 || blob.cols % 2 != 0) {
    throw Error(Errc::InvalidBlob, "stored dimensions must be even and nonzero, got " +
                                       std::to_string(blob.rows) + "x" +
                                       std::to_string(blob.cols));
  }
  if (blob.ranges.size() != range_count(blob.kind)) {
    throw Error(Errc::InvalidBlob, "wrong number of quantizer ranges");
  }
  for (const auto& r : blob.ranges) {
    if (!std::isfinite(r.minimum) || !std::isfinite(r.step) || !(r.step > 0.0)) {
      throw Error(Errc::InvalidBlob, "quantizer step must be finite and positive");
    }
  }
  if (blob.kind == CodecKind::Poac &&
      (!std::isfinite(blob.scalars.lh) || !std::isfinite(blob.scalars.hl) ||
       !std::isfinite(blob.scalars.hh))) {
    throw Error(Errc::InvalidBlob, "projection scalars must be finite");
  }
}

CodecKind kind_from_byte(std::uint8_t v) {
  if (v < 1 || v > 3) throw Error(Errc::BadCodecKind, "codec kind byte " + std::to_string(v));
  return static_cast<CodecKind>(v);
}

CodecKind kind_for(ThresholdMode mode) {
  return mode == ThresholdMode::Soft ? CodecKind::SoftThreshold : CodecKind::HardThreshold;
}

}  // namespace

QuantizedPlane quantize_uniform(const Plane& plane) {
  if (plane.empty()) throw Error(Errc::EmptyInput, "cannot quantize an empty plane");
  QuantizedPlane q;
  q.rows = plane.rows();
  q.cols = plane.cols();
  const auto [lo, hi] = std::minmax_element(plane.values().begin(), plane.values().end());
  q.minimum = *lo;
  q.codes.assign(plane.size(), 0);
  if (*hi == *lo) {
    q.step = 1.0;
    return q;
  }
  q.step = (*hi - *lo) / 255.0;
  std::transform(plane.values().begin(), plane.values().end(), q.codes.begin(), [&](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::round((v - q.minimum) / q.step), 0.0, 255.0));
  });
  return q;
}

Plane dequantize(const QuantizedPlane& q) {
  Plane out(q.rows, q.cols);
  std::transform(q.codes.begin(), q.codes.end(), out.values().begin(),
                 [&](std::uint8_t c) { return q.minimum + c * q.step; });
  return out;
}

std::size_t blob_size(const CompressedBlob& blob) {
  return (blob.kind == CodecKind::Poac ? kPoacHeaderSize : kThresholdHeaderSize) +
         blob.payload.size();
}

std::vector<std::uint8_t> serialize_blob(const CompressedBlob& blob) {
  validate(blob);
  Writer w;
  w.bytes(kMagic);
  w.u8(kContainerVersion);
  w.u8(static_cast<std::uint8_t>(blob.kind));
  w.u8(static_cast<std::uint8_t>(blob.wavelet));
  w.u32(blob.rows);
  w.u32(blob.cols);
  for (const auto& r : blob.ranges) {
    w.f64(r.minimum);
    w.f64(r.step);
  }
  if (blob.kind == CodecKind::Poac) {
    w.f64(blob.scalars.lh);
    w.f64(blob.scalars.hl);
    w.f64(blob.scalars.hh);
  }
  w.bytes(blob.code_lengths);
  w.u64(blob.bit_count);
  w.bytes(blob.payload);
  return w.take();
}

CompressedBlob parse_blob(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const std::size_t head = std::min(bytes.size(), kMagic.size());
  if (!std::equal(kMagic.begin(), kMagic.begin() + head, bytes.begin())) {
    throw Error(Errc::BadMagic, "not a POAC container");
  }
  if (head < kMagic.size()) {
    throw Error(Errc::TruncatedBlob, "blob ends inside the magic");
  }
  r.bytes(kMagic.size());
  const std::uint8_t version = r.u8();
  if (version != kContainerVersion) {
    throw Error(Errc::BadVersion, "container version " + std::to_string(version));
  }
  CompressedBlob blob;
  blob.kind = kind_from_byte(r.u8());
  blob.wavelet = wavelet_from_byte(r.u8());
  blob.rows = r.u32();
  blob.cols = r.u32();
  blob.ranges.resize(range_count(blob.kind));
  for (auto& q : blob.ranges) {
    q.minimum = r.f64();
    q.step = r.f64();
  }
  if (blob.kind == CodecKind::Poac) {
    blob.scalars.lh = r.f64();
    blob.scalars.hl = r.f64();
    blob.scalars.hh = r.f64();
  }
  auto table = r.bytes(kAlphabetSize);
  std::copy(table.begin(), table.end(), blob.code_lengths.begin());
  blob.bit_count = r.u64();
  validate(blob);

  const std::uint64_t payload_bytes = (blob.bit_count + 7) / 8;
  if (r.remaining() < payload_bytes) {
    throw Error(Errc::TruncatedPayload, "payload needs " + std::to_string(payload_bytes) +
                                            " bytes, found " + std::to_string(r.remaining()));
  }
  if (r.remaining() > payload_bytes) {
    throw Error(Errc::InvalidBlob,
                std::to_string(r.remaining() - payload_bytes) + " trailing bytes after payload");
  }
  auto payload = r.bytes(static_cast<std::size_t>(payload_bytes));
  blob.payload.assign(payload.begin(), payload.end());
  return blob;
}

CompressedBlob poac_encode(const Image& image, Wavelet id) {
  check_encodable(image);
  const Subbands sb = dwt2d_level(to_plane(image), id);
  const PoacScalars s = poac_scalars(sb);
  const QuantizedPlane q = quantize_uniform(sb.ll);
  HuffmanEncoded coded = huffman_encode(q.codes);

  CompressedBlob blob;
  blob.kind = CodecKind::Poac;
  blob.wavelet = id;
  blob.rows = static_cast<std::uint32_t>(image.rows());
  blob.cols = static_cast<std::uint32_t>(image.cols());
  blob.ranges = {QuantRange{q.minimum, q.step}};
  blob.scalars = s;
  blob.code_lengths = coded.code_lengths;
  blob.bit_count = coded.bit_count;
  blob.payload = std::move(coded.bits);
  return blob;
}

Image poac_decode(const CompressedBlob& blob) {
  if (blob.kind != CodecKind::Poac) throw Error(Errc::BadCodecKind, "blob is not POAC-coded");
  validate(blob);
  const std::size_t half_r = blob.rows / 2;
  const std::size_t half_c = blob.cols / 2;
  QuantizedPlane q;
  q.rows = half_r;
  q.cols = half_c;
  q.minimum = blob.ranges[0].minimum;
  q.step = blob.ranges[0].step;
  q.codes = huffman_decode(blob.code_lengths, blob.payload, blob.bit_count, half_r * half_c);
  const Plane ll = dequantize(q);
  return to_image(idwt2d_level(poac_reconstruct_subbands(ll, blob.scalars, blob.wavelet)));
}

CompressedBlob threshold_encode(const Image& image, Wavelet id, ThresholdMode mode) {
  check_encodable(image);
  const Subbands sb = shrink_subbands(dwt2d_level(to_plane(image), id), mode);

  CompressedBlob blob;
  blob.kind = kind_for(mode);
  blob.wavelet = id;
  blob.rows = static_cast<std::uint32_t>(image.rows());
  blob.cols = static_cast<std::uint32_t>(image.cols());
  std::vector<std::uint8_t> symbols;
  symbols.reserve(4 * sb.ll.size());
  for (const Plane* p : {&sb.ll, &sb.lh, &sb.hl, &sb.hh}) {
    const QuantizedPlane q = quantize_uniform(*p);
    blob.ranges.push_back({q.minimum, q.step});
    symbols.insert(symbols.end(), q.codes.begin(), q.codes.end());
  }
  HuffmanEncoded coded = huffman_encode(symbols);
  blob.code_lengths = coded.code_lengths;
  blob.bit_count = coded.bit_count;
  blob.payload = std::move(coded.bits);
  return blob;
}

Image threshold_decode(const CompressedBlob& blob) {
  if (blob.kind == CodecKind::Poac) {
    throw Error(Errc::BadCodecKind, "blob is not threshold-coded");
  }
  validate(blob);
  const std::size_t half_r = blob.rows / 2;
  const std::size_t half_c = blob.cols / 2;
  const std::size_t per_band = half_r * half_c;
  const auto symbols =
      huffman_decode(blob.code_lengths, blob.payload, blob.bit_count, 4 * per_band);

  std::array<Plane, 4> bands;
  for (std::size_t b = 0; b < 4; ++b) {
    QuantizedPlane q;
    q.rows = half_r;
    q.cols = half_c;
    q.minimum = blob.ranges[b].minimum;
    q.step = blob.ranges[b].step;
    const auto first = symbols.begin() + static_cast<std::ptrdiff_t>(b * per_band);
    q.codes.assign(first, first + static_cast<std::ptrdiff_t>(per_band));
    bands[b] = dequantize(q);
  }
  Subbands sb{std::move(bands[0]), std::move(bands[1]), std::move(bands[2]),
              std::move(bands[3]), blob.wavelet, 1};
  return to_image(idwt2d_level(sb));
}

Image decode_blob(const CompressedBlob& blob) {
  return blob.kind == CodecKind::Poac ? poac_decode(blob) : threshold_decode(blob);
}

}  // namespace poac
