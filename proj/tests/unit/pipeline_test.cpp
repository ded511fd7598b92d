#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "poac/codec.hpp"
#include "poac/metrics.hpp"
#include "poac/noise.hpp"
#include "poac/pgm.hpp"
#include "poac/pipeline.hpp"

namespace fs = std::filesystem;

namespace poac {
namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("poac_pipeline_" + std::string(info->name()));
    fs::remove_all(dir_);
    config_.input = testing::data_path("camera256.pgm");
    config_.out_dir = dir_;
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  BenchConfig config_;
};

TEST(FormatNumber, SixSignificantDigits) {
  EXPECT_EQ(format_number(24.53859), "24.5386");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(65025.0), "65025");
  EXPECT_EQ(format_number(1234567.0), "1.23457e+06");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
}

TEST_F(PipelineTest, DenoiseWritesTable) {
  const DenoiseResult r = run_denoise(config_);
  for (const char* f : {"noisy.pgm", "st.pgm", "ht.pgm", "poac.pgm", "table1.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / f)) << f;
  }
  const auto rows = lines(slurp(dir_ / "table1.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "metric,ST,HT,POAC");
  EXPECT_EQ(rows[1].rfind("MSE,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("PSNR,", 0), 0u);
  EXPECT_EQ(slurp(dir_ / "table1.csv").find('\r'), std::string::npos);
  EXPECT_EQ(read_pgm_file(dir_ / "poac.pgm"), r.poac);
  EXPECT_EQ(read_pgm_file(dir_ / "noisy.pgm"), r.noisy);

  const std::string first = slurp(dir_ / "table1.csv");
  run_denoise(config_);
  EXPECT_EQ(slurp(dir_ / "table1.csv"), first);
  EXPECT_EQ(table1_csv(r), first);
}

TEST_F(PipelineTest, CompressBlobsMatchDecodedImages) {
  const CompressResult r = run_compress(config_);
  const auto rows = lines(slurp(dir_ / "table2.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "metric,ST,HT,POAC");
  EXPECT_EQ(rows[1].rfind("CR,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("PSS,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("MSE,", 0), 0u);
  EXPECT_EQ(rows[4].rfind("PSNR,", 0), 0u);
  for (const char* name : {"st", "ht", "poac"}) {
    const auto bytes = read_file_bytes(dir_ / (std::string(name) + ".poac"));
    const Image decoded = decode_blob(parse_blob(bytes));
    EXPECT_EQ(decoded, read_pgm_file(dir_ / (std::string(name) + "_decoded.pgm"))) << name;
  }
  EXPECT_EQ(r.poac.bytes.size(), fs::file_size(dir_ / "poac.poac"));
  EXPECT_EQ(*r.poac.report.cr, 65536.0 / static_cast<double>(r.poac.bytes.size()));
  EXPECT_GT(*r.poac.report.cr, *r.st.report.cr);
  EXPECT_GT(*r.poac.report.cr, *r.ht.report.cr);
}

TEST_F(PipelineTest, HistogramFiles) {
  const HistogramSet set = run_hist(config_);
  for (auto state : kHistStates) {
    for (auto label : kSubbandLabels) {
      const fs::path p = dir_ / ("hist_" + std::string(hist_state_name(state)) + "_" +
                                 std::string(subband_name(label)) + ".csv");
      ASSERT_TRUE(fs::exists(p)) << p;
      const auto rows = lines(slurp(p));
      ASSERT_EQ(rows.size(), 257u);
      EXPECT_EQ(rows[0], "bin,lower,upper,count");
      std::uint64_t total = 0;
      for (std::size_t j = 1; j < rows.size(); ++j) {
        total += std::stoull(rows[j].substr(rows[j].rfind(',') + 1));
      }
      EXPECT_EQ(total, 128u * 128u);
      EXPECT_EQ(set.at(state, label).total(), 128u * 128u);
    }
  }
  EXPECT_TRUE(fs::exists(dir_ / "hist_pre_LL.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "hist_poac_HH.csv"));
}

TEST(HistogramExperiment, ProjectionCountsEqualLl) {
  const Image clean = read_pgm_file(testing::data_path("camera256.pgm"));
  for (std::uint64_t seed : {0u, 1u, 2u, 3u, 42u}) {
  const Image img = seed == 0 ? clean : add_gaussian(clean, {0.0, 0.1, seed});
  for (auto id : {Wavelet::DB1, Wavelet::DB2, Wavelet::DB4}) {
    const HistogramSet set = histogram_experiment(img, id);
    const auto& ll = set.at(HistState::Poac, SubbandLabel::LL).counts;
    for (auto label : {SubbandLabel::LH, SubbandLabel::HL, SubbandLabel::HH}) {
      const auto& counts = set.at(HistState::Poac, label).counts;
      for (std::size_t j = 0; j < ll.size(); ++j) {
        EXPECT_EQ(counts[j], ll[j]) << wavelet_name(id) << " " << subband_name(label) << " bin " << j;
      }
    }
    EXPECT_EQ(set.at(HistState::Pre, SubbandLabel::LL).counts,
              set.at(HistState::Soft, SubbandLabel::LL).counts);
  }
  }
}

TEST(HistogramExperiment, ShrinkageConcentratesAtZero) {
  const Image img = add_gaussian(read_pgm_file(testing::data_path("camera256.pgm")), {0, 0.1, 42});
  const HistogramSet set = histogram_experiment(img, Wavelet::DB1);
  for (auto label : {SubbandLabel::LH, SubbandLabel::HL, SubbandLabel::HH}) {
    const HistogramData& pre = set.at(HistState::Pre, label);
    const auto pre_bin = pre.zero_bin();
    ASSERT_TRUE(pre_bin.has_value());
    for (auto state : {HistState::Soft, HistState::Hard}) {
      const HistogramData& h = set.at(state, label);
      const auto bin = h.zero_bin();
      ASSERT_TRUE(bin.has_value());
      EXPECT_GE(h.counts[*bin], pre.counts[*pre_bin]);
      EXPECT_GT(static_cast<double>(h.counts[*bin]), 0.5 * static_cast<double>(h.total()));
    }
  }
}

TEST(QualityCsv, Rows) {
  QualityReport r;
  r.mse = 0.0;
  r.psnr = std::numeric_limits<double>::infinity();
  EXPECT_EQ(quality_csv(r), "metric,value\nMSE,0\nPSNR,inf\n");
  r.cr = 4.0;
  r.pss = 75.0;
  EXPECT_EQ(quality_csv(r), "metric,value\nMSE,0\nPSNR,inf\nCR,4\nPSS,75\n");
}

}  // namespace
}  // namespace poac
