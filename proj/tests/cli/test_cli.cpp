#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "nikolskii/cli/run.hpp"

using nikolskii::cli::main_entry;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "nikolskii");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(NIKOLSKII_GOLDEN_DIR) / name, std::ios::binary);
  EXPECT_TRUE(in) << name;
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"constant_interval_p2.csv",
       {"constant", "--domain", "interval", "--weight", "gegenbauer:0.5", "--p", "2", "--n", "5", "--at", "1"}},
      {"constant_disk_p4.csv",
       {"constant", "--domain", "ball", "--m", "2", "--weight", "gegenbauer:0.5", "--p", "4", "--n", "3", "--at", "1",
        "0"}},
      {"scan_ball_m2.csv", {"scan", "--theorem", "ball", "--m", "2", "--lambda", "0", "--p", "2", "--nmax", "20"}},
      {"table_interval.csv", {"table", "--kind", "interval", "--lambda", "0", "--nmax", "10"}},
      {"gto_interval.csv", {"gto", "--kind", "interval", "--lambda", "0", "--n", "2", "--t", "0.6"}},
      {"verify_exact.csv", {"verify", "--suite", "exact-formulas"}},
  };
  return cases;
}

}  // namespace

TEST(Cli, GoldenFilesAreByteIdentical) {
  for (const GoldenCase& c : golden_cases()) {
    const Outcome r = invoke(c.args);
    EXPECT_EQ(r.status, 0) << c.file << '\n' << r.err;
    EXPECT_EQ(r.out, golden(c.file)) << c.file;
  }
}

TEST(Cli, SameSeedSameBytes) {
  const std::vector<std::string> args = {"constant", "--domain", "cube", "--m", "2", "--weight", "gegenbauer:0.5,1",
                                         "--p", "3", "--n", "2", "--seed", "17"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, ConstantExampleValue) {
  const Outcome r = invoke(golden_cases()[0].args);
  EXPECT_NE(r.out.find("4.24264068711928"), std::string::npos);
}

TEST(Cli, ScanExampleWithinFivePercent) {
  const Outcome r = invoke(golden_cases()[2].args);
  const std::string last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  const double gap = std::stod(last.substr(last.rfind(',') + 1));
  // s_n = L (1 + 1/n) here, so the gap at n = 20 is 1/20 up to rounding.
  EXPECT_NEAR(gap, 0.05, 1e-12);
}

TEST(Cli, JsonFormat) {
  std::vector<std::string> args = golden_cases()[0].args;
  args.insert(args.end(), {"--format", "json"});
  const Outcome r = invoke(args);
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["result"]["value"].get<double>(), 4.242640687119285, 1e-12);
  EXPECT_EQ(j["exact"].get<double>(), 4.242640687119285);
}

TEST(Cli, UsageErrorsAreJsonWithStatusTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {"constant", "--domain", "torus"},
      {"constant", "--domain", "interval", "--p", "0.5", "--n", "2"},
      {"gto", "--kind", "ball-gegenbauer", "--m", "2", "--lambda", "0", "--t", "0.5"},
      {"scan", "--theorem", "point", "--alpha", "0", "--beta", "-0.7"},
      {"verify", "--suite", "nope"},
      {"frobnicate"},
  };
  for (const auto& args : bad) {
    const Outcome r = invoke(args);
    EXPECT_EQ(r.status, 2) << args[0];
    const auto j = nlohmann::json::parse(r.err);
    EXPECT_TRUE(j.contains("error"));
    EXPECT_TRUE(j["error"].contains("message"));
  }
}

TEST(Cli, VerifySuitesPass) {
  for (const char* suite : {"gto-eigen", "chain", "substitution"}) {
    const Outcome r = invoke({"verify", "--suite", suite});
    EXPECT_EQ(r.status, 0) << suite << '\n' << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
}

TEST(Cli, ToleranceOverrideCanFailVerification) {
  ::setenv("NIKOLSKII_TOL_EIGEN", "1e-30", 1);
  const Outcome r = invoke({"verify", "--suite", "gto-eigen"});
  ::unsetenv("NIKOLSKII_TOL_EIGEN");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "nikolskii_cli_table.csv";
  const Outcome r = invoke({"table", "--kind", "interval", "--lambda", "0", "--nmax", "10", "-o", path.string()});
  ASSERT_EQ(r.status, 0);
  std::ifstream in(path, std::ios::binary);
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()),
            golden("table_interval.csv"));
  std::filesystem::remove(path);
}

TEST(Cli, UnwritableOutputIsIoError) {
  const Outcome r = invoke({"table", "--kind", "interval", "--lambda", "0", "--nmax", "2", "-o", "/nonexistent/x.csv"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(nlohmann::json::parse(r.err)["error"]["code"], "io");
}
