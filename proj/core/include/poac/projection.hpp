#pragma once

#include "poac/image.hpp"
#include "poac/wavelet.hpp"

namespace poac {

/// Projection coefficients of the three detail subbands onto LL.
struct PoacScalars {
  double lh = 0.0;
  double hl = 0.0;
  double hh = 0.0;

  friend bool operator==(const PoacScalars&, const PoacScalars&) = default;
};

/// Frobenius inner product sum_ij a_ij * b_ij, which equals trace(a * b^T).
/// Accumulated sequentially in row-major order.
double frobenius_inner(const Plane& a, const Plane& b);

/// Least-squares coefficient s minimizing ||detail - s * ll||_F:
///   s = <ll, detail>_F / <ll, ll>_F
/// Throws DegenerateProjection when ll is identically zero.
double projection_scalar(const Plane& ll, const Plane& detail);

PoacScalars poac_scalars(const Subbands& sb);

/// Rebuilds each detail subband as its scalar times LL.
Subbands poac_reconstruct_subbands(const Plane& ll, const PoacScalars& s, Wavelet id);

/// Projection denoiser: DWT, replace details by s * LL, inverse DWT.
Image poac_denoise(const Image& image, Wavelet id);

}  // namespace poac
