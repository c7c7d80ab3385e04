#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ucf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ucf_cli_" + name)).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream(path) << content;
}

}  // namespace

TEST(Cli, ConstructWritesTheFamilyAndTrace) {
  const auto r = run({"construct", "--kind", "intermediate", "--n", "6", "--m", "10", "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["sets"].size(), 10U);
  EXPECT_EQ(j["trace"]["b"], 2);
  EXPECT_EQ(j["trace"]["expansion"], nlohmann::json({2, 1, 0}));
}

TEST(Cli, ConstructThenAnalyzeRoundTrip) {
  const auto path = temp_path("t4.json");
  ASSERT_EQ(run({"construct", "--kind", "staircase", "--n", "4", "-o", path}).code, 0);
  const auto r = run({"analyze", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weight"], 6);
  EXPECT_EQ(j["degrees"], nlohmann::json({0, 1, 2, 3}));
  EXPECT_TRUE(j["is_union_closed"].get<bool>());
  EXPECT_TRUE(j["is_separating"].get<bool>());
  EXPECT_EQ(j["frankl"]["count"], 3);
  std::remove(path.c_str());
}

TEST(Cli, AnalyzeReportsTheReduction) {
  const auto path = temp_path("merged.txt");
  write_file(path, "3\n1 2\n1 2 3\n");
  const auto r = run({"analyze", "--input", path, "--l", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["is_separating"].get<bool>());
  EXPECT_EQ(j["reduction_size"], 2);
  EXPECT_EQ(j["l"], 2);
  std::remove(path.c_str());
}

TEST(Cli, MalformedInputExitsWithTwo) {
  const auto path = temp_path("bad.json");
  write_file(path, R"({"n": 3, "sets": [[4]]})");
  const auto r = run({"analyze", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("outside"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_EQ(run({"analyze", temp_path("missing.json")}).code, 2);
}

TEST(Cli, UnsatisfiablePairExitsWithTwo) {
  const auto r = run({"construct", "--kind", "intermediate", "--n", "3", "--m", "9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("m <= 2^n"), std::string::npos) << r.err;
  EXPECT_EQ(run({"search", "--n", "3", "--m", "9"}).code, 2);
}

TEST(Cli, BoundsCsv) {
  const auto r = run({"bounds", "--n", "4", "--m", "8"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,m,l,reimer,separation,combined,upper,avg_deg,knill,satisfiable\n"
                   "4,8,1,12,6,12,30,3,2.66666666667,true\n");
  const auto j = nlohmann::json::parse(run({"bounds", "--n", "4", "--m", "8", "--format", "json"}).out);
  EXPECT_EQ(j["separation_lower"], 6);
}

TEST(Cli, SearchReportsTheMinimum) {
  const auto r = run({"search", "--n", "4", "--m", "3", "--l", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["min_value"], 4);
  EXPECT_EQ(j["witnesses"].size(), 1U);
  EXPECT_EQ(run({"search", "--n", "5", "--m", "8"}).code, 2);
}

TEST(Cli, VerifySuitesPass) {
  for (const char* suite : {"staircase", "theorem3", "l-fold", "lemma8", "conjectures", "reimer", "structure", "all"}) {
    const auto r = run({"verify", "--suite", suite, "--max-n", "4"});
    EXPECT_EQ(r.code, 0) << suite << ": " << r.err;
  }
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "all", "--max-n", "5"}).code, 2);
}

TEST(Cli, SweepCsv) {
  const auto r = run({"sweep", "--max-m", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n,m,l,w,lower,upper,ratio_reimer,ratio_sep\n", 0), 0U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "staircase"}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "cube", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
