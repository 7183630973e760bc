#include <gtest/gtest.h>

#include <json.hpp>

#include "lgq/report.hpp"

using namespace lgq;
using report::Check;
using report::Status;

namespace {

Check make(const std::string& id, Status s, bool experimental = false) {
  Check c;
  c.id = id;
  c.status = s;
  c.expected = "1";
  c.actual = s == Status::Pass ? "1" : "2";
  c.reference = "\"quoted\"";
  c.experimental = experimental;
  c.runtime_ms = 17;
  return c;
}

}  // namespace

TEST(Report, EmptyCheckList) {
  report::Report r;
  r.command = "qh";
  auto j = nlohmann::json::parse(report::to_json(r));
  EXPECT_TRUE(j["checks"].is_array());
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(j["status"], "pass");
  EXPECT_NE(report::to_json(r).find("\"checks\": []"), std::string::npos);
}

TEST(Report, FailingCheckFailsTheReport) {
  report::Report r;
  r.add(make("a", Status::Pass));
  r.add(make("b", Status::Fail));
  EXPECT_EQ(r.overall(), Status::Fail);
  EXPECT_EQ(nlohmann::json::parse(report::to_json(r))["status"], "fail");
}

TEST(Report, SkippedChecksDoNotFail) {
  report::Report r;
  r.add(make("a", Status::Skipped));
  EXPECT_EQ(r.overall(), Status::Pass);
}

TEST(Report, ExperimentalFailuresNeedStrict) {
  report::Report r;
  r.add(make("a", Status::Fail, true));
  EXPECT_EQ(r.overall(), Status::Pass);
  r.strict = true;
  EXPECT_EQ(r.overall(), Status::Fail);
}

TEST(Report, DuplicateIdsRejected) {
  report::Report r;
  r.add(make("a", Status::Pass));
  EXPECT_THROW(r.add(make("a", Status::Pass)), Error);
}

TEST(Report, ChecksSortedAndTimingsOptIn) {
  report::Report r;
  r.add(make("zeta", Status::Pass));
  r.add(make("alpha", Status::Pass));
  auto j = nlohmann::json::parse(report::to_json(r));
  EXPECT_EQ(j["checks"][0]["id"], "alpha");
  EXPECT_FALSE(j["checks"][0].contains("runtime_ms"));
  EXPECT_EQ(j["checks"][0]["reference"], "\"quoted\"");
  auto t = nlohmann::json::parse(report::to_json(r, {true}));
  EXPECT_EQ(t["checks"][0]["runtime_ms"], 17);
}

TEST(Report, MatrixText) {
  Matrix<RatFunc> m(4, 4, RatFunc(0));
  for (int i = 0; i < 4; ++i) m(i, i) = RatFunc(i);
  EXPECT_EQ(report::matrix_text(m), "[[0,0,0,0],[0,1,0,0],[0,0,2,0],[0,0,0,3]]");
}

TEST(Report, MarkdownRendersMatricesAsTables) {
  report::Report r;
  r.command = "gm";
  Matrix<RatFunc> m(2, 2, RatFunc(0));
  m(0, 1) = RatFunc(3);
  r.matrices.push_back(report::named_matrix("A0", m));
  r.add(make("a|b", Status::Pass));
  auto md = report::to_markdown(r);
  EXPECT_NE(md.find("## A0"), std::string::npos);
  EXPECT_NE(md.find("| 0 | 3 |"), std::string::npos);
  EXPECT_NE(md.find("a\\|b"), std::string::npos);
}

TEST(Report, RunIdIsStable) {
  EXPECT_EQ(report::make_run_id({"gm", "n=1"}), report::make_run_id({"gm", "n=1"}));
  EXPECT_NE(report::make_run_id({"gm", "n=1"}), report::make_run_id({"gm", "n=2"}));
  EXPECT_NE(report::make_run_id({"ab", "c"}), report::make_run_id({"a", "bc"}));
  EXPECT_EQ(report::make_run_id({}).size(), 16u);
}
