#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "auit/cli.hpp"
#include "auit/report.hpp"

using namespace auit;
namespace fs = std::filesystem;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("auit-cli-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}
}  // namespace

TEST(Cli, RunWritesCsvManifestAndChart) {
  const auto dir = scratch_dir("run");
  const auto r = cli({"run", "--group", "SL9&O1", "--episodes", "5", "--seed", "7", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto table = read_csv(dir / "results.csv");
  EXPECT_EQ(table.header, kCsvColumns);
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0][2], "SL9&O1");
  EXPECT_EQ(table.rows[0][12], "7");
  EXPECT_EQ(r.out, slurp(dir / "results.csv"));
  EXPECT_TRUE(fs::exists(dir / "chart.svg"));
  const auto j = nlohmann::json::parse(slurp(dir / "manifest.json"));
  EXPECT_EQ(j["command"], "run");
  EXPECT_EQ(j["master_seed"], 7);
  EXPECT_EQ(j["version"], kToolVersion);
}

TEST(Cli, IdenticalInvocationsGiveIdenticalCsv) {
  const auto a = scratch_dir("rep-a");
  const auto b = scratch_dir("rep-b");
  const std::vector<std::string> common{"compare", "-g", "SL3&TL1", "-g", "SL2&O2", "--episodes", "4", "--seed", "11"};
  auto args_a = common;
  args_a.insert(args_a.end(), {"-o", a.string()});
  auto args_b = common;
  args_b.insert(args_b.end(), {"-o", b.string(), "--threads", "1"});
  ASSERT_EQ(cli(args_a).code, 0);
  ASSERT_EQ(cli(args_b).code, 0);
  EXPECT_EQ(slurp(a / "results.csv"), slurp(b / "results.csv"));
  EXPECT_EQ(slurp(a / "subgroups.csv"), slurp(b / "subgroups.csv"));
  const auto ja = nlohmann::json::parse(slurp(a / "manifest.json"));
  const auto jb = nlohmann::json::parse(slurp(b / "manifest.json"));
  EXPECT_EQ(ja["result_digest"], jb["result_digest"]);
}

TEST(Cli, ComplexityReportsDefaultGrid) {
  const auto r = cli({"complexity"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("grid 20x20\n"), std::string::npos);
  EXPECT_NE(r.out.find("H_bits 17.29\n"), std::string::npos);
  EXPECT_NE(r.out.find("K_bits "), std::string::npos);
  EXPECT_NE(cli({"complexity", "--grid", "30"}).out.find("H_bits 19.63\n"), std::string::npos);
}

TEST(Cli, TimeSweepHasSixRows) {
  const auto dir = scratch_dir("time");
  const auto r = cli({"sweep", "--axis", "time", "--group", "IL10&O10", "--episodes", "2", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  const auto table = read_csv(dir / "results.csv");
  std::vector<std::string> iterations;
  for (const auto& row : table.rows) iterations.push_back(row[5]);
  EXPECT_EQ(iterations, (std::vector<std::string>{"10", "20", "50", "100", "200", "500"}));
}

TEST(Cli, SizeSweepWithPoints) {
  const auto dir = scratch_dir("size");
  const auto r = cli({"sweep", "--axis", "size", "-g", "SL9&TL1", "--points", "10", "20", "--episodes", "2",
                      "--no-chart", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto table = read_csv(dir / "results.csv");
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_EQ(table.rows[1][2], "SL18&TL2");
  EXPECT_FALSE(fs::exists(dir / "chart.svg"));
}

TEST(Cli, ConfigFile) {
  const auto dir = scratch_dir("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "params.ini");
    cfg << "grid = 10\niterations = 5\nepisodes = 3\nseed = 4\ngroup = SL2&O1\n";
  }
  const auto r = cli({"run", "--config", (dir / "params.ini").string(), "-o", (dir / "out").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto table = read_csv(dir / "out" / "results.csv");
  EXPECT_EQ(table.rows[0][2], "SL2&O1");
  EXPECT_EQ(table.rows[0][3], "10");
  EXPECT_EQ(table.rows[0][5], "5");
  EXPECT_EQ(table.rows[0][6], "3");
}

TEST(Cli, ExitCodes) {
  const auto dir = scratch_dir("errors");
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"run", "--episodes", "many"}).code, kExitUsage);
  EXPECT_EQ(cli({"sweep", "-g", "SL2"}).code, kExitUsage);
  EXPECT_EQ(cli({"run", "-g", "SL0&O1", "-o", dir.string()}).code, kExitConfig);
  EXPECT_EQ(cli({"run", "-g", "SL2", "--grid", "4", "-o", dir.string()}).code, kExitConfig);
  EXPECT_EQ(cli({"sweep", "--axis", "diagonal", "-g", "SL2", "-o", dir.string()}).code, kExitConfig);
  fs::create_directories(dir);
  std::ofstream(dir / "blocker") << "x";
  EXPECT_EQ(cli({"run", "-g", "R2", "--episodes", "1", "-o", (dir / "blocker" / "sub").string()}).code, kExitIo);
  EXPECT_EQ(cli({"run", "--config", (dir / "absent.ini").string()}).code, kExitIo);
  EXPECT_EQ(cli({"--version"}).code, kExitOk);
}
