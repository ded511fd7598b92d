#include "poac/projection.hpp"

#include <cmath>

#include "poac/error.hpp"

namespace poac {

double frobenius_inner(const Plane& a, const Plane& b) {
  if (!a.same_shape(b)) {
    throw Error(Errc::DimensionMismatch, "inner product of planes with different shapes");
  }
  const auto x = a.values();
  const auto y = b.values();
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double projection_scalar(const Plane& ll, const Plane& detail) {
  if (!ll.same_shape(detail)) {
    throw Error(Errc::DimensionMismatch, "LL and detail subbands differ in shape");
  }
  const double energy = frobenius_inner(ll, ll);
  if (!(energy > 0.0)) {
    throw Error(Errc::DegenerateProjection, "approximation subband is identically zero");
  }
  return frobenius_inner(ll, detail) / energy;
}

PoacScalars poac_scalars(const Subbands& sb) {
  return PoacScalars{projection_scalar(sb.ll, sb.lh), projection_scalar(sb.ll, sb.hl),
                     projection_scalar(sb.ll, sb.hh)};
}

Subbands poac_reconstruct_subbands(const Plane& ll, const PoacScalars& s, Wavelet id) {
  if (!std::isfinite(s.lh) || !std::isfinite(s.hl) || !std::isfinite(s.hh)) {
    throw Error(Errc::InvalidArgument, "projection scalars must be finite");
  }
  return Subbands{ll, scaled(ll, s.lh), scaled(ll, s.hl), scaled(ll, s.hh), id, 1};
}

Image poac_denoise(const Image& image, Wavelet id) {
  const Subbands sb = dwt2d_level(to_plane(image), id);
  const PoacScalars s = poac_scalars(sb);
  return to_image(idwt2d_level(poac_reconstruct_subbands(sb.ll, s, id)));
}

}  // namespace poac
