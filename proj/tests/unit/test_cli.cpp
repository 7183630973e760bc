#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lgq/cli.hpp"

using lgq::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run lgq_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GmReportsA0) {
  auto r = lgq_run({"gm", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "gm");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["matrices"]["A0"][0][2], "3*q");
  EXPECT_EQ(j["matrices"]["A0"][1][0], "3");
  EXPECT_FALSE(j["notes"].empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(lgq_run({"qh", "--n", "0"}).code, 64);
  EXPECT_EQ(lgq_run({}).code, 64);
  EXPECT_EQ(lgq_run({"frobnicate"}).code, 64);
  EXPECT_EQ(lgq_run({"qh", "--format", "xml"}).code, 64);
  EXPECT_EQ(lgq_run({"tame", "--chart", "3"}).code, 64);
  EXPECT_EQ(lgq_run({"tame", "--chart", "010", "--all"}).code, 64);
  EXPECT_EQ(lgq_run({"verify-all", "--n", "2"}).code, 64);
  EXPECT_EQ(lgq_run({"qh", "--budget", "-3"}).code, 64);
}

TEST(Cli, ParseErrorOnMalformedClass) {
  auto r = lgq_run({"gm", "--class", "D1+*D2"});
  EXPECT_EQ(r.code, 65);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, ReducesUserClass) {
  auto r = lgq_run({"gm", "--class", "D3^2", "--budget", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["values"]["reduction"], "theta^3*w3+2*q*theta*w2+q*theta^2*w1+q^2*w0");
}

TEST(Cli, BudgetExhaustion) {
  EXPECT_EQ(lgq_run({"gm", "--budget", "0"}).code, 2);
  setenv("LGQ_BUDGET", "0", 1);
  EXPECT_EQ(lgq_run({"gm"}).code, 2);
  setenv("LGQ_BUDGET", "zero", 1);
  EXPECT_EQ(lgq_run({"gm"}).code, 64);
  unsetenv("LGQ_BUDGET");
}

TEST(Cli, DeterministicJson) {
  auto a = lgq_run({"qh", "--seed", "5"});
  auto b = lgq_run({"qh", "--seed", "5"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = lgq_run({"qh", "--seed", "6"});
  EXPECT_NE(nlohmann::json::parse(a.out)["run_id"], nlohmann::json::parse(c.out)["run_id"]);
}

TEST(Cli, TimingsAreOptIn) {
  auto plain = nlohmann::json::parse(lgq_run({"qh"}).out);
  EXPECT_FALSE(plain["checks"][0].contains("runtime_ms"));
  auto timed = nlohmann::json::parse(lgq_run({"qh", "--timings"}).out);
  EXPECT_TRUE(timed["checks"][0].contains("runtime_ms"));
}

TEST(Cli, MarkdownFormat) {
  auto r = lgq_run({"qh", "--format", "md"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# lgq qh", 0), 0u);
  EXPECT_NE(r.out.find("## U"), std::string::npos);
}

TEST(Cli, WritesToFile) {
  const std::string path = ::testing::TempDir() + "lgq_cli_report.json";
  auto r = lgq_run({"potential", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "potential");
  std::remove(path.c_str());
  EXPECT_EQ(lgq_run({"qh", "--out", "/nonexistent-dir/x.json"}).code, 74);
}

TEST(Cli, ExperimentalOutputForHigherN) {
  auto r = lgq_run({"gm", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["experimental"], true);
    EXPECT_EQ(c["provenance"], "derived");
  }
}

TEST(Cli, SingleChart) {
  auto r = lgq_run({"tame", "--chart", "010"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  bool rewrite = false;
  for (const auto& c : j["checks"]) rewrite = rewrite || c["id"] == "tame.rewrite.V010.identity";
  EXPECT_TRUE(rewrite);
}

TEST(Cli, Help) {
  auto r = lgq_run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify-all"), std::string::npos);
}
