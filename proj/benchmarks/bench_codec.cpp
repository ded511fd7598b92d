#include <benchmark/benchmark.h>

#include <random>

#include "poac/codec.hpp"
#include "poac/huffman.hpp"

namespace {

std::vector<std::uint8_t> skewed_symbols(std::size_t n) {
  std::mt19937 gen(1234);
  std::geometric_distribution<int> dist(0.05);
  std::vector<std::uint8_t> out(n);
  for (auto& s : out) s = static_cast<std::uint8_t>(std::min(dist(gen), 255));
  return out;
}

void BM_HuffmanEncode(benchmark::State& state) {
  const auto symbols = skewed_symbols(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poac::huffman_encode(symbols));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HuffmanEncode)->Arg(1 << 14)->Arg(1 << 16);

void BM_HuffmanDecode(benchmark::State& state) {
  const auto symbols = skewed_symbols(static_cast<std::size_t>(state.range(0)));
  const auto enc = poac::huffman_encode(symbols);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        poac::huffman_decode(enc.code_lengths, enc.bits, enc.bit_count, symbols.size()));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HuffmanDecode)->Arg(1 << 14)->Arg(1 << 16);

poac::Image ramp(std::size_t n) {
  poac::Image img(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) img.at(r, c) = static_cast<std::uint8_t>((r + 2 * c) / 3);
  }
  return img;
}

void BM_PoacEncode(benchmark::State& state) {
  const auto img = ramp(256);
  for (auto _ : state) benchmark::DoNotOptimize(poac::serialize_blob(poac::poac_encode(img, poac::Wavelet::DB1)));
}
BENCHMARK(BM_PoacEncode);

void BM_PoacDecode(benchmark::State& state) {
  const auto bytes = poac::serialize_blob(poac::poac_encode(ramp(256), poac::Wavelet::DB1));
  for (auto _ : state) benchmark::DoNotOptimize(poac::decode_blob(poac::parse_blob(bytes)));
}
BENCHMARK(BM_PoacDecode);

void BM_ThresholdEncode(benchmark::State& state) {
  const auto img = ramp(256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        poac::serialize_blob(poac::threshold_encode(img, poac::Wavelet::DB1, poac::ThresholdMode::Hard)));
  }
}
BENCHMARK(BM_ThresholdEncode);

}  // namespace
