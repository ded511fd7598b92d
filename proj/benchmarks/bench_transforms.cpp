#include <benchmark/benchmark.h>

#include "poac/noise.hpp"
#include "poac/projection.hpp"
#include "poac/shrinkage.hpp"
#include "poac/wavelet.hpp"

namespace {

poac::Image synthetic(std::size_t n) {
  poac::Image img(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) img.at(r, c) = static_cast<std::uint8_t>((r * 3 + c * 5) & 0xFF);
  }
  return poac::add_gaussian(img, {0.0, 0.1, 7});
}

void BM_Dwt2d(benchmark::State& state) {
  const auto wavelet = static_cast<poac::Wavelet>(state.range(1));
  const auto plane = poac::to_plane(synthetic(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto sb = poac::dwt2d_level(plane, wavelet);
    benchmark::DoNotOptimize(sb.ll.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(plane.size()));
}
BENCHMARK(BM_Dwt2d)->ArgsProduct({{256, 512}, {1, 2, 4}});

void BM_Idwt2d(benchmark::State& state) {
  const auto wavelet = static_cast<poac::Wavelet>(state.range(1));
  const auto sb = poac::dwt2d_level(
      poac::to_plane(synthetic(static_cast<std::size_t>(state.range(0)))), wavelet);
  for (auto _ : state) {
    auto p = poac::idwt2d_level(sb);
    benchmark::DoNotOptimize(p.values().data());
  }
}
BENCHMARK(BM_Idwt2d)->ArgsProduct({{256, 512}, {1, 2, 4}});

void BM_PoacDenoise(benchmark::State& state) {
  const auto img = synthetic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poac::poac_denoise(img, poac::Wavelet::DB1));
}
BENCHMARK(BM_PoacDenoise)->Arg(256)->Arg(512);

void BM_ShrinkDenoise(benchmark::State& state) {
  const auto img = synthetic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(poac::shrink_denoise(img, poac::Wavelet::DB1, poac::ThresholdMode::Soft));
  }
}
BENCHMARK(BM_ShrinkDenoise)->Arg(256)->Arg(512);

void BM_GaussianNoise(benchmark::State& state) {
  poac::Image img(256, 256);
  for (auto _ : state) benchmark::DoNotOptimize(poac::add_gaussian(img, {0.0, 0.1, 42}));
}
BENCHMARK(BM_GaussianNoise);

}  // namespace
