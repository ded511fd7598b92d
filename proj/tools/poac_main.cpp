// poac: wavelet-domain denoising and compression by projection onto the
// approximation subband, with soft/hard shrinkage baselines.
//
//   poac denoise  --input img.pgm [--sigma 0.1] [--seed 42] --out dir
//   poac compress --input img.pgm --out dir
//   poac hist     --input img.pgm --out dir
//   poac noise | encode | decode | metrics ...
//
// Exit status: 0 success, 1 data/processing failure, 2 usage error.

#include <cctype>
#include <cmath>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "poac/poac.hpp"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct Options {
  poac::BenchConfig config;
  std::string wavelet = "db1";
  std::string mode;
  std::string codec;
  double variance = -1.0;
};

void add_common(CLI::App* cmd, Options& o, bool noise_flags) {
  cmd->add_option("--input", o.config.input, "Input PGM (or .poac for decode)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", o.config.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--wavelet", o.wavelet, "Wavelet basis")
      ->check(CLI::IsMember({"db1", "db2", "db4"}, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--mode", o.mode, "Threshold mode")
      ->check(CLI::IsMember({"soft", "hard"}, CLI::ignore_case));
  if (noise_flags) {
    auto* sigma = cmd->add_option("--sigma", o.config.noise_sigma,
                                  "Noise standard deviation on the [0,1] scale")
                      ->check(CLI::NonNegativeNumber)
                      ->capture_default_str();
    cmd->add_option("--variance", o.variance, "Noise variance on the [0,1] scale")
        ->check(CLI::NonNegativeNumber)
        ->excludes(sigma);
    cmd->add_option("--mean", o.config.noise_mean, "Noise mean on the [0,1] scale")
        ->capture_default_str();
    cmd->add_option("--seed", o.config.seed, "Noise seed")->capture_default_str();
  }
}

void print_report(const char* name, const poac::QualityReport& r) {
  std::cout << name << ": MSE " << poac::format_number(r.mse) << "  PSNR "
            << poac::format_number(r.psnr) << " dB";
  if (r.cr) std::cout << "  CR " << poac::format_number(*r.cr);
  if (r.pss) std::cout << "  PSS " << poac::format_number(*r.pss) << "%";
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet denoising and compression by projection onto approximation coefficients"};
  app.require_subcommand(1);
  Options o;

  auto* denoise = app.add_subcommand("denoise", "Add noise, denoise with ST/HT/POAC, write table1.csv");
  auto* compress = app.add_subcommand("compress", "Compress with ST/HT/POAC, write table2.csv");
  auto* hist = app.add_subcommand("hist", "Write per-subband coefficient histograms");
  auto* noise = app.add_subcommand("noise", "Write a noisy copy of the input");
  auto* encode = app.add_subcommand("encode", "Encode a PGM into a .poac container");
  auto* decode = app.add_subcommand("decode", "Decode a .poac container into a PGM");
  auto* metrics = app.add_subcommand("metrics", "Compare two PGMs");

  add_common(denoise, o, true);
  add_common(compress, o, false);
  add_common(hist, o, true);
  add_common(noise, o, true);
  add_common(encode, o, false);
  add_common(decode, o, false);
  add_common(metrics, o, false);
  encode->add_option("--codec", o.codec, "Container codec")
      ->check(CLI::IsMember({"poac", "st", "ht"}, CLI::ignore_case));
  metrics->add_option("--reference", o.config.reference, "Reference PGM")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto& cfg = o.config;
    cfg.wavelet = poac::parse_wavelet(o.wavelet);
    if (!o.mode.empty()) cfg.mode = poac::parse_mode(o.mode);
    if (o.variance >= 0.0) cfg.noise_sigma = std::sqrt(o.variance);
    if (!o.codec.empty()) {
      static const std::map<std::string, poac::CodecKind> kinds{
          {"poac", poac::CodecKind::Poac},
          {"st", poac::CodecKind::SoftThreshold},
          {"ht", poac::CodecKind::HardThreshold}};
      std::string lower = o.codec;
      for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      cfg.codec = kinds.at(lower);
    } else if (!o.mode.empty()) {
      cfg.codec = cfg.mode == poac::ThresholdMode::Soft ? poac::CodecKind::SoftThreshold
                                                        : poac::CodecKind::HardThreshold;
    }

    if (*denoise) {
      auto r = poac::run_denoise(cfg);
      print_report("noisy", r.noisy_report);
      print_report("ST", r.st_report);
      print_report("HT", r.ht_report);
      print_report("POAC", r.poac_report);
    } else if (*compress) {
      auto r = poac::run_compress(cfg);
      print_report("ST", r.st.report);
      print_report("HT", r.ht.report);
      print_report("POAC", r.poac.report);
    } else if (*hist) {
      auto set = poac::run_hist(cfg);
      std::cout << "s_LH " << poac::format_number(set.scalars.lh) << "  s_HL "
                << poac::format_number(set.scalars.hl) << "  s_HH "
                << poac::format_number(set.scalars.hh) << '\n';
    } else if (*noise) {
      std::cout << poac::run_noise(cfg).string() << '\n';
    } else if (*encode) {
      std::cout << poac::run_encode(cfg).string() << '\n';
    } else if (*decode) {
      std::cout << poac::run_decode(cfg).string() << '\n';
    } else if (*metrics) {
      std::cout << poac::quality_csv(poac::run_metrics(cfg));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
