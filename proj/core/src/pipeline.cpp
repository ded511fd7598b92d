#include "poac/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "poac/error.hpp"
#include "poac/pgm.hpp"
#include "poac/projection.hpp"

namespace poac {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::Io, "cannot create " + dir.string() + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

// Multiplying by s is monotone but not strictly so: an LL value just below an
// edge can round onto the scaled edge and change bins. Such edges are moved
// down onto the colliding value, a shift of a few ulps, so every LL value
// keeps its side of every edge under each scaling.
void snap_edges(std::vector<double>& edges, const Plane& ll, const PoacScalars& scalars) {
  std::vector<double> sorted(ll.values().begin(), ll.values().end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> factors;
  for (double s : {scalars.lh, scalars.hl, scalars.hh}) {
    if (s != 0.0) factors.push_back(std::abs(s));
  }
  for (std::size_t j = 1; j + 1 < edges.size(); ++j) {
    for (bool moved = true; moved;) {
      moved = false;
      const auto below = std::lower_bound(sorted.begin(), sorted.end(), edges[j]);
      if (below == sorted.begin()) break;
      const double v = *std::prev(below);
      for (double f : factors) {
        if (f * v == f * edges[j]) {
          edges[j] = v;
          moved = true;
          break;
        }
      }
    }
  }
}

CompressedMethod finish(const Image& clean, CompressedBlob blob) {
  CompressedMethod m;
  m.bytes = serialize_blob(blob);
  m.decoded = decode_blob(blob);
  m.report = quality_report(clean, m.decoded, m.bytes.size());
  m.blob = std::move(blob);
  return m;
}

std::string stem_of(const fs::path& p) { return p.stem().string(); }

}  // namespace

DenoiseResult denoise_experiment(const Image& clean, const BenchConfig& config) {
  DenoiseResult r;
  r.noisy = add_gaussian(clean, config.noise());
  r.st = shrink_denoise(r.noisy, config.wavelet, ThresholdMode::Soft);
  r.ht = shrink_denoise(r.noisy, config.wavelet, ThresholdMode::Hard);
  r.poac = poac_denoise(r.noisy, config.wavelet);
  r.noisy_report = quality_report(clean, r.noisy);
  r.st_report = quality_report(clean, r.st);
  r.ht_report = quality_report(clean, r.ht);
  r.poac_report = quality_report(clean, r.poac);
  return r;
}

CompressResult compress_experiment(const Image& clean, Wavelet id) {
  CompressResult r;
  r.st = finish(clean, threshold_encode(clean, id, ThresholdMode::Soft));
  r.ht = finish(clean, threshold_encode(clean, id, ThresholdMode::Hard));
  r.poac = finish(clean, poac_encode(clean, id));
  return r;
}

std::string_view hist_state_name(HistState state) noexcept {
  switch (state) {
    case HistState::Pre: return "pre";
    case HistState::Soft: return "st";
    case HistState::Hard: return "ht";
    case HistState::Poac: return "poac";
  }
  return "unknown";
}

HistogramSet histogram_experiment(const Image& image, Wavelet id) {
  const Subbands pre = dwt2d_level(to_plane(image), id);
  const Subbands soft = shrink_subbands(pre, ThresholdMode::Soft);
  const Subbands hard = shrink_subbands(pre, ThresholdMode::Hard);

  HistogramSet set;
  set.scalars = poac_scalars(pre);
  const Subbands proj = poac_reconstruct_subbands(pre.ll, set.scalars, id);

  auto own_range = [](const Subbands& sb) {
    return std::array<HistogramData, 4>{
        subband_histogram(sb.ll, 256, SubbandLabel::LL),
        subband_histogram(sb.lh, 256, SubbandLabel::LH),
        subband_histogram(sb.hl, 256, SubbandLabel::HL),
        subband_histogram(sb.hh, 256, SubbandLabel::HH)};
  };
  set.histograms[0] = own_range(pre);
  set.histograms[1] = own_range(soft);
  set.histograms[2] = own_range(hard);

  auto& poac_hist = set.histograms[3];
  {
    auto edges = subband_histogram(proj.ll, 256, SubbandLabel::LL).bin_edges;
    snap_edges(edges, proj.ll, set.scalars);
    poac_hist[0] = histogram_over_edges(proj.ll, edges, SubbandLabel::LL);
  }
  const std::array<std::pair<const Plane*, double>, 3> details{
      {{&proj.lh, set.scalars.lh}, {&proj.hl, set.scalars.hl}, {&proj.hh, set.scalars.hh}}};
  for (std::size_t i = 0; i < details.size(); ++i) {
    const auto [plane, s] = details[i];
    const auto label = kSubbandLabels[i + 1];
    // A zero scalar collapses the bin map; fall back to the plane's own range.
    poac_hist[i + 1] = s != 0.0
                           ? histogram_over_edges(*plane, scale_edges(poac_hist[0].bin_edges, s), label)
                           : subband_histogram(*plane, 256, label);
  }
  return set;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string table1_csv(const DenoiseResult& r) {
  std::ostringstream out;
  out << "metric,ST,HT,POAC\n";
  out << "MSE," << format_number(r.st_report.mse) << ',' << format_number(r.ht_report.mse) << ','
      << format_number(r.poac_report.mse) << '\n';
  out << "PSNR," << format_number(r.st_report.psnr) << ',' << format_number(r.ht_report.psnr)
      << ',' << format_number(r.poac_report.psnr) << '\n';
  return out.str();
}

std::string table2_csv(const CompressResult& r) {
  std::ostringstream out;
  auto row = [&](const char* name, auto field) {
    out << name << ',' << format_number(field(r.st.report)) << ','
        << format_number(field(r.ht.report)) << ',' << format_number(field(r.poac.report))
        << '\n';
  };
  out << "metric,ST,HT,POAC\n";
  row("CR", [](const QualityReport& q) { return *q.cr; });
  row("PSS", [](const QualityReport& q) { return *q.pss; });
  row("MSE", [](const QualityReport& q) { return q.mse; });
  row("PSNR", [](const QualityReport& q) { return q.psnr; });
  return out.str();
}

std::string histogram_csv(const HistogramData& hist) {
  std::ostringstream out;
  out << "bin,lower,upper,count\n";
  for (std::size_t j = 0; j < hist.counts.size(); ++j) {
    out << j << ',' << format_number(hist.bin_edges[j]) << ','
        << format_number(hist.bin_edges[j + 1]) << ',' << hist.counts[j] << '\n';
  }
  return out.str();
}

std::string quality_csv(const QualityReport& report) {
  std::ostringstream out;
  out << "metric,value\n";
  out << "MSE," << format_number(report.mse) << '\n';
  out << "PSNR," << format_number(report.psnr) << '\n';
  if (report.cr) out << "CR," << format_number(*report.cr) << '\n';
  if (report.pss) out << "PSS," << format_number(*report.pss) << '\n';
  return out.str();
}

DenoiseResult run_denoise(const BenchConfig& config) {
  const Image clean = read_pgm_file(config.input);
  DenoiseResult r = denoise_experiment(clean, config);
  ensure_dir(config.out_dir);
  write_pgm_file(config.out_dir / "noisy.pgm", r.noisy);
  write_pgm_file(config.out_dir / "st.pgm", r.st);
  write_pgm_file(config.out_dir / "ht.pgm", r.ht);
  write_pgm_file(config.out_dir / "poac.pgm", r.poac);
  write_text(config.out_dir / "table1.csv", table1_csv(r));
  return r;
}

CompressResult run_compress(const BenchConfig& config) {
  const Image clean = read_pgm_file(config.input);
  CompressResult r = compress_experiment(clean, config.wavelet);
  ensure_dir(config.out_dir);
  const std::array<std::pair<const char*, const CompressedMethod*>, 3> methods{
      {{"st", &r.st}, {"ht", &r.ht}, {"poac", &r.poac}}};
  for (const auto& [name, m] : methods) {
    write_file_bytes(config.out_dir / (std::string(name) + ".poac"), m->bytes);
    write_pgm_file(config.out_dir / (std::string(name) + "_decoded.pgm"), m->decoded);
  }
  write_text(config.out_dir / "table2.csv", table2_csv(r));
  return r;
}

HistogramSet run_hist(const BenchConfig& config) {
  const Image clean = read_pgm_file(config.input);
  const Image noisy = add_gaussian(clean, config.noise());
  HistogramSet set = histogram_experiment(noisy, config.wavelet);
  ensure_dir(config.out_dir);
  for (auto state : kHistStates) {
    for (auto label : kSubbandLabels) {
      std::string name = "hist_" + std::string(hist_state_name(state)) + "_" +
                         std::string(subband_name(label)) + ".csv";
      write_text(config.out_dir / name, histogram_csv(set.at(state, label)));
    }
  }
  return set;
}

fs::path run_noise(const BenchConfig& config) {
  const Image noisy = add_gaussian(read_pgm_file(config.input), config.noise());
  ensure_dir(config.out_dir);
  const fs::path out = config.out_dir / "noisy.pgm";
  write_pgm_file(out, noisy);
  return out;
}

fs::path run_encode(const BenchConfig& config) {
  const Image image = read_pgm_file(config.input);
  CompressedBlob blob;
  switch (config.codec) {
    case CodecKind::Poac: blob = poac_encode(image, config.wavelet); break;
    case CodecKind::SoftThreshold:
      blob = threshold_encode(image, config.wavelet, ThresholdMode::Soft);
      break;
    case CodecKind::HardThreshold:
      blob = threshold_encode(image, config.wavelet, ThresholdMode::Hard);
      break;
  }
  ensure_dir(config.out_dir);
  const fs::path out = config.out_dir / (stem_of(config.input) + ".poac");
  write_file_bytes(out, serialize_blob(blob));
  return out;
}

fs::path run_decode(const BenchConfig& config) {
  const Image image = decode_blob(parse_blob(read_file_bytes(config.input)));
  ensure_dir(config.out_dir);
  const fs::path out = config.out_dir / (stem_of(config.input) + ".pgm");
  write_pgm_file(out, image);
  return out;
}

QualityReport run_metrics(const BenchConfig& config) {
  if (config.reference.empty()) {
    throw Error(Errc::InvalidArgument, "metrics needs a reference image");
  }
  return quality_report(read_pgm_file(config.input), read_pgm_file(config.reference));
}

}  // namespace poac
