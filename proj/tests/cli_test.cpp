// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternq/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace patternq::cli {
namespace {

using nlohmann::json;

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) {
  return read_file(std::filesystem::path(PATTERNQ_GOLDEN_DIR) / name);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliBasis, RankOneText) {
  const auto r = invoke({"basis", "--rank", "1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, golden("basis_rank1.txt"));
}

TEST(CliBasis, RankTwoJson) {
  const auto r = invoke({"basis", "--rank", "2", "--format", "json"});
  ASSERT_EQ(r.code, kSuccess);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "basis");
  EXPECT_EQ(j["rank"], 2);
  ASSERT_EQ(j["results"].size(), 16u);
  for (const auto& e : j["results"]) EXPECT_EQ(e["ratio"], "3/8");
  EXPECT_EQ(j["results"][3]["pattern"], "1000 1000 1000 0111");
  EXPECT_EQ(invoke({"basis", "--rank", "2", "--json"}).code, kSuccess);
}

TEST(CliBasis, BadRank) {
  const auto r = invoke({"basis", "--rank", "0"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(contains(r.err, "--rank"));
  EXPECT_EQ(invoke({"basis"}).code, kUsageError);
  EXPECT_EQ(invoke({"basis", "--rank", "x"}).code, kUsageError);
}

TEST(CliClassify, FourQubitExample) {
  const auto r = invoke({"classify", "--pattern", "1000 1000 1000 0111"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, golden("classify_f3_rank2.txt"));
}

TEST(CliClassify, ByRankAndIndex) {
  const auto r = invoke({"classify", "--rank", "1", "--index", "2"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(contains(r.out, "bits: 10\n"));
  EXPECT_EQ(invoke({"classify", "--rank", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"classify", "--rank", "1", "--index", "4"}).code, kUsageError);
  EXPECT_EQ(invoke({"classify", "--pattern", "0001", "--rank", "1"}).code, kUsageError);
}

TEST(CliClassify, OutOfPromiseWarning) {
  const auto r = invoke({"classify", "--pattern", "1010"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(contains(r.out, "out_of_promise: true"));
  EXPECT_TRUE(contains(r.out, "warning: out-of-promise"));
}

TEST(CliClassify, ParseFailure) {
  EXPECT_EQ(invoke({"classify", "--pattern", "01x1"}).code, kUsageError);
  EXPECT_EQ(invoke({"classify", "--pattern", "00000"}).code, kUsageError);
}

TEST(CliClassify, TextAndJsonAgree) {
  const auto text = invoke({"classify", "--pattern", "0111", "--state", "--faithful"});
  const auto js = invoke({"classify", "--pattern", "0111", "--state", "--faithful", "--json"});
  ASSERT_EQ(text.code, kSuccess);
  ASSERT_EQ(js.code, kSuccess);
  const json e = json::parse(js.out)["results"][0];
  EXPECT_TRUE(contains(text.out, "index: " + std::to_string(e["index"].get<int>()) + "\n"));
  EXPECT_TRUE(contains(text.out, "bits: " + e["bits"].get<std::string>() + "\n"));
  EXPECT_TRUE(contains(text.out, "queries_used: 1\n"));
  EXPECT_EQ(e["queries_used"], 1);
  EXPECT_EQ(e["negated"], true);
  EXPECT_TRUE(contains(text.out, "negated: true\n"));
  EXPECT_EQ(e["faithful"], true);
  EXPECT_EQ(e["state"].size(), 4u);
  EXPECT_TRUE(contains(text.out, "state: [0, 0, 0, -1]"));
  EXPECT_NEAR(e["state"][3].get<double>(), -1.0, 1e-12);
}

TEST(CliVerify, RankTwo) {
  const auto r = invoke({"verify", "--rank-max", "2"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(contains(r.out, "classify_exhaustive: 16/16"));
  EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(CliVerify, RankThreeOrthogonalityPairs) {
  const auto r = invoke({"verify", "--rank-max", "3", "--json"});
  ASSERT_EQ(r.code, kSuccess);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  bool found = false;
  for (const auto& c : j["results"]) {
    if (c["name"] == "orthogonality pairs" && c["rank"] == 3) {
      EXPECT_EQ(c["passed"], 2016);
      EXPECT_EQ(c["total"], 2016);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(contains(invoke({"verify", "--rank-max", "3"}).out, "orthogonality pairs: 2016/2016"));
}

TEST(CliVerify, Guard) {
  const auto r = invoke({"verify", "--rank-max", "9"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSample, FourQubitHistogram) {
  const auto r = invoke({"sample", "--pattern", "1000 1000 1000 0111", "--shots", "2048"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, golden("sample_f3_rank2.txt"));
}

TEST(CliSample, SingleShot) {
  const auto r = invoke({"sample", "--pattern", "0001", "--shots", "1", "--json"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_EQ(json::parse(r.out)["results"][0]["counts"], (json{{"00", 1}}));
}

TEST(CliSample, OutOfPromiseReproducible) {
  const std::vector<std::string> args = {"sample", "--pattern", "1010", "--shots", "4096",
                                         "--seed", "7"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, golden("sample_balanced_seed7.txt"));
  auto js = args;
  js.push_back("--json");
  EXPECT_GT(json::parse(invoke(js).out)["results"][0]["counts"].size(), 1u);
  EXPECT_EQ(invoke({"sample", "--pattern", "1010", "--shots", "0"}).code, kUsageError);
}

TEST(CliExport, WritesFileByteForByte) {
  const auto dir = std::filesystem::temp_directory_path() / "patternq_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "rank1.txt").string();
  const auto r = invoke({"export", "--pattern", "0100", "--out", path});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(read_file(path), golden("export_rank1_0100.txt"));
  const auto again = (dir / "rank1_again.txt").string();
  ASSERT_EQ(invoke({"export", "--pattern", "0100", "--out", again}).code, kSuccess);
  EXPECT_EQ(read_file(again), read_file(path));
  std::filesystem::remove_all(dir);
}

TEST(CliExport, RankTwoPairs) {
  const auto r = invoke({"export", "--pattern", "1000 1000 1000 0111"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(contains(r.out, "cz q0 q1\n"));
  EXPECT_TRUE(contains(r.out, "cz q2 q3\n"));
}

TEST(CliExport, Errors) {
  EXPECT_EQ(invoke({"export", "--pattern", ""}).code, kUsageError);
  EXPECT_EQ(invoke({"export", "--pattern", "0100", "--out", "/nonexistent-dir/x/y.txt"}).code,
            kCheckFailure);
}

TEST(CliGame, RankTwo) {
  const auto r = invoke({"game", "--rank", "2", "--seed", "1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, golden("game_rank2_seed1.txt"));
}

TEST(CliGame, NegationUsesTwoQueries) {
  const auto r = invoke({"game", "--rank", "1", "--seed", "9", "--allow-negation", "--json"});
  ASSERT_EQ(r.code, kSuccess);
  const json e = json::parse(r.out)["results"][0];
  EXPECT_EQ(e["winner"], "Alice");
  EXPECT_EQ(e["queries"], 2);
  EXPECT_EQ(e["disambiguation_used"], true);
}

TEST(CliGame, Guard) { EXPECT_EQ(invoke({"game", "--rank", "5"}).code, kUsageError); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}

TEST(Cli, JsonIsByteIdenticalWithoutTiming) {
  const std::vector<std::string> args = {"--no-timing", "game", "--rank", "3", "--seed", "5",
                                         "--allow-negation", "--json"};
  const auto a = invoke(args);
  EXPECT_EQ(a.out, invoke(args).out);
  EXPECT_EQ(json::parse(a.out)["timing_ms"], 0.0);
}

TEST(RunReport, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"basis", "--rank", "2", "--json"},
           {"classify", "--pattern", "1010", "--state", "--json"},
           {"verify", "--rank-max", "1", "--json"},
           {"sample", "--pattern", "1010", "--shots", "100", "--json"},
           {"game", "--rank", "2", "--json"}}) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, kSuccess) << args[0];
    const RunReport report = json::parse(r.out).get<RunReport>();
    EXPECT_EQ(report.command, args[0]);
    EXPECT_EQ(json(report).get<RunReport>(), report);
    EXPECT_EQ(json(report).dump(2) + "\n", r.out);
  }
}

}  // namespace
}  // namespace patternq::cli
