#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "poac/error.hpp"
#include "poac/metrics.hpp"
#include "poac/noise.hpp"
#include "poac/pgm.hpp"
#include "poac/shrinkage.hpp"

namespace poac {
namespace {

Plane row(std::vector<double> v) {
  const std::size_t n = v.size();
  return Plane(1, n, std::move(v));
}

std::vector<double> vals(const Plane& p) { return {p.values().begin(), p.values().end()}; }

TEST(MadSigma, HandEvaluated) {
  EXPECT_EQ(mad_sigma(Plane(4, 4)), 0.0);
  EXPECT_DOUBLE_EQ(mad_sigma(row({3, -1, 2})), 2.965159377316531);
  EXPECT_DOUBLE_EQ(mad_sigma(row({1, -1, 2, -2})), 2.2238695329873983);
  EXPECT_DOUBLE_EQ(mad_sigma(row({-7})), 7 / 0.6745);
}

TEST(MadSigma, EmptyPlaneIsError) {
  try {
    mad_sigma(Plane());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyInput);
  }
}

TEST(MadSigma, PermutationSignAndScale) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 9;
    Plane p = testing::random_plane(n, 3, gen);
    const double base = mad_sigma(p);
    EXPECT_EQ(mad_sigma(scaled(p, -1.0)), base);
    auto shuffled = vals(p);
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_EQ(mad_sigma(Plane(3, n, shuffled)), base);
    for (double alpha : {2.5, -0.3, 1e3}) {
      EXPECT_NEAR(mad_sigma(scaled(p, alpha)), std::abs(alpha) * base,
                  1e-12 * std::abs(alpha) * base);
    }
  }
}

TEST(UniversalThreshold, Values) {
  EXPECT_EQ(universal_threshold(0.0, 100), 0.0);
  EXPECT_EQ(universal_threshold(3.0, 1), 0.0);
  // sqrt(2 ln 16384), natural log.
  EXPECT_NEAR(universal_threshold(1.0, 16384), 4.4054649080066985, 1e-12);
  EXPECT_NEAR(universal_threshold(2.0, 16384), 2 * 4.4054649080066985, 1e-12);
  EXPECT_THROW(universal_threshold(1.0, 0), Error);
}

TEST(HardThreshold, ElementwiseRule) {
  EXPECT_EQ(vals(hard_threshold(row({-5, -1, 0, 1, 5}), 1.0)),
            (std::vector<double>{-5, 0, 0, 0, 5}));
  EXPECT_EQ(vals(hard_threshold(row({-5, -1e-300, 0, 1, 5}), 0.0)),
            (std::vector<double>{-5, -1e-300, 0, 1, 5}));
  EXPECT_EQ(vals(hard_threshold(row({-5, 1, 1e300}), std::numeric_limits<double>::max())),
            (std::vector<double>{0, 0, 0}));
}

TEST(SoftThreshold, ElementwiseRule) {
  EXPECT_EQ(vals(soft_threshold(row({-5, -1, 0, 1, 5}), 1.0)),
            (std::vector<double>{-4, 0, 0, 0, 4}));
  const Plane p = row({-3.5, 0.25, 7});
  EXPECT_EQ(vals(soft_threshold(p, 0.0)), vals(p));
}

TEST(Threshold, OrderingAndIdempotence) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Plane c = testing::random_plane(8, 8, gen, -10, 10);
    const double lambda = trial * 0.1;
    const Plane h = hard_threshold(c, lambda);
    const Plane s = soft_threshold(c, lambda);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_LE(std::abs(s.values()[i]), std::abs(h.values()[i]));
      EXPECT_LE(std::abs(h.values()[i]), std::abs(c.values()[i]));
    }
    EXPECT_EQ(hard_threshold(h, lambda), h);
    // Soft shrinkage composes additively instead of being idempotent.
    EXPECT_LE(testing::max_abs_diff(soft_threshold(s, lambda), soft_threshold(c, 2 * lambda)),
              1e-12);
  }
}

TEST(Threshold, SoftIsNotIdempotent) {
  const Plane once = soft_threshold(row({5.0}), 1.0);
  EXPECT_EQ(once.at(0, 0), 4.0);
  EXPECT_EQ(soft_threshold(once, 1.0).at(0, 0), 3.0);
  EXPECT_EQ(soft_threshold(once, 0.0), once);
}

TEST(Threshold, SoftIsContinuousHardJumpsAtLambda) {
  const double lambda = 2.0;
  const double eps = 1e-9;
  auto soft = [&](double x) { return soft_threshold(row({x}), lambda).at(0, 0); };
  auto hard = [&](double x) { return hard_threshold(row({x}), lambda).at(0, 0); };
  for (double edge : {lambda, -lambda}) {
    EXPECT_NEAR(soft(edge - eps), soft(edge + eps), 4 * eps);
    EXPECT_GT(std::abs(hard(edge + std::copysign(eps, edge)) - hard(edge)), 1.0);
  }
  // Away from +-lambda hard thresholding is locally continuous.
  for (double x : {-5.0, -0.5, 0.0, 1.0, 3.0}) EXPECT_NEAR(hard(x + eps), hard(x), 2 * eps);
}

TEST(Threshold, NegativeLambdaRejected) {
  EXPECT_THROW(hard_threshold(row({1}), -1.0), Error);
  EXPECT_THROW(soft_threshold(row({1}), -1.0), Error);
}

TEST(ShrinkSubbands, PerSubbandEstimates) {
  std::mt19937_64 gen(8);
  Subbands sb{testing::random_plane(8, 8, gen), testing::random_plane(8, 8, gen, -1, 1),
              testing::random_plane(8, 8, gen, -10, 10), testing::random_plane(8, 8, gen, -100, 100),
              Wavelet::DB1, 1};
  const Subbands out = shrink_subbands(sb, ThresholdMode::Hard);
  EXPECT_EQ(out.ll, sb.ll);
  for (auto [in, res] : {std::pair{&sb.lh, &out.lh}, {&sb.hl, &out.hl}, {&sb.hh, &out.hh}}) {
    const double lambda = universal_threshold(mad_sigma(*in), in->size());
    EXPECT_EQ(*res, hard_threshold(*in, lambda));
  }
}

TEST(ShrinkDenoise, ConstantImageUnchanged) {
  const Image img(16, 16, std::vector<std::uint8_t>(256, 77));
  for (auto id : {Wavelet::DB1, Wavelet::DB2, Wavelet::DB4}) {
    EXPECT_EQ(shrink_denoise(img, id, ThresholdMode::Soft), img);
    EXPECT_EQ(shrink_denoise(img, id, ThresholdMode::Hard), img);
  }
}

TEST(ShrinkDenoise, SmoothGradientBeatsZeroingDetails) {
  Image img(64, 64);
  for (std::size_t r = 0; r < 64; ++r) {
    for (std::size_t c = 0; c < 64; ++c) img.at(r, c) = static_cast<std::uint8_t>(2 * r + c + 10);
  }
  for (auto id : {Wavelet::DB1, Wavelet::DB2, Wavelet::DB4}) {
    Subbands sb = dwt2d_level(to_plane(img), id);
    sb.lh = Plane(32, 32);
    sb.hl = Plane(32, 32);
    sb.hh = Plane(32, 32);
    const double oracle = psnr(img, to_image(idwt2d_level(sb)));
    for (auto mode : {ThresholdMode::Soft, ThresholdMode::Hard}) {
      EXPECT_GE(psnr(img, shrink_denoise(img, id, mode)), oracle);
    }
  }
}

TEST(ShrinkDenoise, ImprovesNoisyFixture) {
  const Image clean = read_pgm_file(testing::data_path("camera256.pgm"));
  const Image noisy = add_gaussian(clean, {0.0, 0.1, 42});
  const double before = psnr(clean, noisy);
  for (auto mode : {ThresholdMode::Soft, ThresholdMode::Hard}) {
    EXPECT_GT(psnr(clean, shrink_denoise(noisy, Wavelet::DB1, mode)), before);
  }
}

TEST(ThresholdMode, Parse) {
  EXPECT_EQ(parse_mode("HARD"), ThresholdMode::Hard);
  EXPECT_EQ(parse_mode("soft"), ThresholdMode::Soft);
  EXPECT_THROW(parse_mode("semi"), Error);
}

}  // namespace
}  // namespace poac
