#include "poac/wavelet.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "poac/error.hpp"

namespace poac {

namespace {

FilterBank make_bank(std::vector<double> h) {
  FilterBank fb;
  const std::size_t len = h.size();
  fb.highpass.resize(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    fb.highpass[k] = sign * h[len - 1 - k];
  }
  fb.lowpass = std::move(h);
  return fb;
}

// Minimum-phase Daubechies scaling filters normalized to sum sqrt(2).
const FilterBank kDb1 = make_bank({
    0.70710678118654752440,
    0.70710678118654752440,
});

const FilterBank kDb2 = make_bank({
    0.48296291314453414337,
    0.83651630373780790558,
    0.22414386804201338103,
    -0.12940952255126038117,
});

const FilterBank kDb4 = make_bank({
    0.23037781330889650086,
    0.71484657055291564709,
    0.63088076792985890788,
    -0.027983769416859854211,
    -0.18703481171909308408,
    0.030841381835560763627,
    0.032883011666885199735,
    -0.010597401785069032105,
});

void check_even(std::size_t n, Errc code, const char* what) {
  if (n == 0 || n % 2 != 0) {
    throw Error(code, std::string(what) + " must be even and nonzero, got " + std::to_string(n));
  }
}

void column(const Plane& p, std::size_t c, std::vector<double>& out) {
  out.resize(p.rows());
  for (std::size_t r = 0; r < p.rows(); ++r) out[r] = p.at(r, c);
}

}  // namespace

std::string_view wavelet_name(Wavelet id) noexcept {
  switch (id) {
    case Wavelet::DB1: return "db1";
    case Wavelet::DB2: return "db2";
    case Wavelet::DB4: return "db4";
  }
  return "unknown";
}

Wavelet parse_wavelet(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "db1" || lower == "haar") return Wavelet::DB1;
  if (lower == "db2") return Wavelet::DB2;
  if (lower == "db4") return Wavelet::DB4;
  throw Error(Errc::InvalidArgument, "unknown wavelet '" + std::string(name) + "'");
}

Wavelet wavelet_from_byte(std::uint8_t value) {
  switch (value) {
    case 1: return Wavelet::DB1;
    case 2: return Wavelet::DB2;
    case 4: return Wavelet::DB4;
    default: throw Error(Errc::BadWavelet, "wavelet byte " + std::to_string(value));
  }
}

const FilterBank& filter_bank(Wavelet id) {
  switch (id) {
    case Wavelet::DB1: return kDb1;
    case Wavelet::DB2: return kDb2;
    case Wavelet::DB4: return kDb4;
  }
  throw Error(Errc::InvalidArgument, "unknown wavelet id");
}

HalfBands dwt1d(std::span<const double> signal, const FilterBank& fb) {
  const std::size_t n = signal.size();
  check_even(n, Errc::OddLength, "signal length");
  const std::size_t half = n / 2;
  const std::size_t taps = fb.length();
  HalfBands out{std::vector<double>(half), std::vector<double>(half)};
  for (std::size_t m = 0; m < half; ++m) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t k = 0; k < taps; ++k) {
      const double x = signal[(2 * m + k) % n];
      a += fb.lowpass[k] * x;
      d += fb.highpass[k] * x;
    }
    out.approx[m] = a;
    out.detail[m] = d;
  }
  return out;
}

std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const FilterBank& fb) {
  if (approx.size() != detail.size()) {
    throw Error(Errc::LengthMismatch, "approx has " + std::to_string(approx.size()) +
                                          " samples, detail has " +
                                          std::to_string(detail.size()));
  }
  if (approx.empty()) throw Error(Errc::EmptyInput, "idwt1d needs at least one coefficient");
  const std::size_t half = approx.size();
  const std::size_t n = 2 * half;
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 0; m < half; ++m) {
    for (std::size_t k = 0; k < fb.length(); ++k) {
      out[(2 * m + k) % n] += fb.lowpass[k] * approx[m] + fb.highpass[k] * detail[m];
    }
  }
  return out;
}

Subbands dwt2d_level(const Plane& plane, Wavelet id) {
  check_even(plane.rows(), Errc::OddDimension, "rows");
  check_even(plane.cols(), Errc::OddDimension, "cols");
  const FilterBank& fb = filter_bank(id);
  const std::size_t rows = plane.rows();
  const std::size_t half_r = rows / 2;
  const std::size_t half_c = plane.cols() / 2;

  Plane low(rows, half_c);
  Plane high(rows, half_c);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = plane.values().subspan(r * plane.cols(), plane.cols());
    auto bands = dwt1d(row, fb);
    std::copy(bands.approx.begin(), bands.approx.end(), low.values().begin() + r * half_c);
    std::copy(bands.detail.begin(), bands.detail.end(), high.values().begin() + r * half_c);
  }

  Subbands sb{Plane(half_r, half_c), Plane(half_r, half_c), Plane(half_r, half_c),
              Plane(half_r, half_c), id, 1};
  std::vector<double> col;
  auto split_columns = [&](const Plane& src, Plane& top, Plane& bottom) {
    for (std::size_t c = 0; c < half_c; ++c) {
      column(src, c, col);
      auto bands = dwt1d(col, fb);
      for (std::size_t r = 0; r < half_r; ++r) {
        top.at(r, c) = bands.approx[r];
        bottom.at(r, c) = bands.detail[r];
      }
    }
  };
  split_columns(low, sb.ll, sb.lh);
  split_columns(high, sb.hl, sb.hh);
  return sb;
}

Plane idwt2d_level(const Subbands& sb) {
  if (sb.level != 1) {
    throw Error(Errc::UnsupportedLevel, "only level 1 is supported, got " +
                                            std::to_string(sb.level));
  }
  if (!sb.ll.same_shape(sb.lh) || !sb.ll.same_shape(sb.hl) || !sb.ll.same_shape(sb.hh)) {
    throw Error(Errc::DimensionMismatch, "subbands do not share one shape");
  }
  if (sb.ll.empty()) throw Error(Errc::EmptyInput, "empty subbands");
  const FilterBank& fb = filter_bank(sb.wavelet);
  const std::size_t half_r = sb.rows();
  const std::size_t half_c = sb.cols();
  const std::size_t rows = 2 * half_r;
  const std::size_t cols = 2 * half_c;

  Plane low(rows, half_c);
  Plane high(rows, half_c);
  std::vector<double> top;
  std::vector<double> bottom;
  auto merge_columns = [&](const Plane& t, const Plane& b, Plane& dst) {
    for (std::size_t c = 0; c < half_c; ++c) {
      column(t, c, top);
      column(b, c, bottom);
      auto merged = idwt1d(top, bottom, fb);
      for (std::size_t r = 0; r < rows; ++r) dst.at(r, c) = merged[r];
    }
  };
  merge_columns(sb.ll, sb.lh, low);
  merge_columns(sb.hl, sb.hh, high);

  Plane out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto merged = idwt1d(low.values().subspan(r * half_c, half_c),
                         high.values().subspan(r * half_c, half_c), fb);
    std::copy(merged.begin(), merged.end(), out.values().begin() + r * cols);
  }
  return out;
}

}  // namespace poac
