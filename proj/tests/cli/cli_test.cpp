#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "poac/pgm.hpp"

namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("poac_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the binary with stdout captured to dir_/stdout.txt; returns the exit status.
  int run(const std::string& args) {
    const std::string cmd = std::string("\"") + POAC_CLI_PATH + "\" " + args + " > \"" +
                            (dir_ / "stdout.txt").string() + "\" 2> \"" +
                            (dir_ / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string output() const {
    std::ifstream in(dir_ / "stdout.txt");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string camera() const {
    return "\"" + poac::testing::data_path("camera256.pgm").string() + "\"";
  }
  std::string out(const std::string& sub) const { return "\"" + (dir_ / sub).string() + "\""; }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("denoise"), 2);
  EXPECT_EQ(run("denoise --input " + camera() + " --wavelet db3"), 2);
  EXPECT_EQ(run("denoise --input " + camera() + " --sigma 0.1 --variance 0.01"), 2);
  EXPECT_EQ(run("metrics --input " + camera()), 2);
  EXPECT_EQ(run("noise --input \"" + (dir_ / "missing.pgm").string() + "\""), 2);
}

TEST_F(CliTest, DataErrorsExitOne) {
  const fs::path junk = dir_ / "junk.pgm";
  std::ofstream(junk) << "P2\n2 2\n255\n0 0 0 0\n";
  EXPECT_EQ(run("noise --input \"" + junk.string() + "\" --out " + out("o")), 1);
  EXPECT_EQ(run("decode --input \"" + junk.string() + "\" --out " + out("o")), 1);
  const std::string odd = "\"" + poac::testing::data_path("tiny_3x2.pgm").string() + "\"";
  EXPECT_EQ(run("encode --input " + odd + " --out " + out("o")), 1);
}

TEST_F(CliTest, MetricsOfIdenticalImages) {
  ASSERT_EQ(run("metrics --input " + camera() + " --reference " + camera()), 0);
  EXPECT_EQ(output(), "metric,value\nMSE,0\nPSNR,inf\n");
}

TEST_F(CliTest, NoiseIsDeterministic) {
  ASSERT_EQ(run("noise --input " + camera() + " --seed 7 --out " + out("a")), 0);
  ASSERT_EQ(run("noise --input " + camera() + " --seed 7 --variance 0.01 --out " + out("b")), 0);
  ASSERT_EQ(run("noise --input " + camera() + " --seed 8 --out " + out("c")), 0);
  const auto a = poac::read_file_bytes(dir_ / "a" / "noisy.pgm");
  EXPECT_EQ(a, poac::read_file_bytes(dir_ / "b" / "noisy.pgm"));
  EXPECT_NE(a, poac::read_file_bytes(dir_ / "c" / "noisy.pgm"));
}

TEST_F(CliTest, EncodeDecodeRoundTrip) {
  for (const char* codec : {"poac", "st", "ht"}) {
    const std::string sub = std::string("enc_") + codec;
    ASSERT_EQ(run("encode --input " + camera() + " --codec " + codec + " --wavelet db2 --out " +
                  out(sub)),
              0);
    const fs::path blob = dir_ / sub / "camera256.poac";
    ASSERT_TRUE(fs::exists(blob));
    ASSERT_EQ(run("decode --input \"" + blob.string() + "\" --out " + out(sub)), 0);
    const poac::Image img = poac::read_pgm_file(dir_ / sub / "camera256.pgm");
    EXPECT_EQ(img.rows(), 256u);
    EXPECT_EQ(img.cols(), 256u);
  }
}

TEST_F(CliTest, BenchSubcommandsWriteOutputs) {
  ASSERT_EQ(run("denoise --input " + camera() + " --out " + out("d")), 0);
  EXPECT_TRUE(fs::exists(dir_ / "d" / "table1.csv"));
  ASSERT_EQ(run("compress --input " + camera() + " --wavelet db4 --out " + out("c")), 0);
  EXPECT_TRUE(fs::exists(dir_ / "c" / "table2.csv"));
  ASSERT_EQ(run("hist --input " + camera() + " --mode hard --out " + out("h")), 0);
  EXPECT_TRUE(fs::exists(dir_ / "h" / "hist_poac_HH.csv"));
}

}  // namespace
