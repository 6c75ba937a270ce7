#include <gtest/gtest.h>

#include "vertexloc/suite.hpp"

using namespace vertexloc;

namespace {

SuiteConfig config(const std::string& name) {
  SuiteConfig c;
  c.suite = name;
  return c;
}

}  // namespace

TEST(Suite, HeisenbergPasses) {
  SuiteConfig c = config("heisenberg");
  c.degree = 8;
  c.modes = 3;
  SuiteResult r = run_suite(c);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.report["schema"], kReportSchema);
}

TEST(Suite, CorruptedConventionFails) {
  SuiteConfig c = config("clifford");
  c.degree = 3;
  c.modes = 3;
  c.neg_rule = NegativeChargeRule::kPlain;
  SuiteResult r = run_suite(c);
  EXPECT_EQ(r.exit_code(), 1);
  bool has_mismatch = false;
  for (const auto& cs : r.report["cases"])
    if (cs.contains("mismatches")) has_mismatch = true;
  EXPECT_TRUE(has_mismatch);
}

TEST(Suite, WrongPrefactorFails) {
  SuiteConfig c = config("hilbert-correspond");
  c.degree = 2;
  c.prefactor = WhooksPrefactor::kTPower;
  EXPECT_EQ(run_suite(c).exit_code(), 1);
}

TEST(Suite, ExitMatchesCases) {
  for (const char* name : {"euler-char", "lemma-FH"}) {
    SuiteConfig c = config(name);
    c.samples = 20;
    SuiteResult r = run_suite(c);
    bool all = true;
    for (const auto& cs : r.report["cases"]) all = all && cs["pass"].get<bool>();
    EXPECT_EQ(r.pass, all) << name;
  }
}

TEST(Suite, Deterministic) {
  SuiteConfig c = config("euler-char");
  c.seed = 99;
  EXPECT_EQ(run_suite(c).text(), run_suite(c).text());
  SuiteConfig d = c;
  d.seed = 100;
  EXPECT_NE(run_suite(c).text(), run_suite(d).text());
}

TEST(Suite, TimingOnlyOnRequest) {
  SuiteConfig c = config("asymptotics");
  c.degree = 2;
  EXPECT_FALSE(run_suite(c).report.contains("timing_ms"));
  c.timing = true;
  EXPECT_TRUE(run_suite(c).report.contains("timing_ms"));
}

TEST(Suite, BadConfig) {
  EXPECT_THROW(run_suite(config("nope")), std::invalid_argument);
  SuiteConfig c = config("clifford");
  c.charges = std::make_pair(2, 1);
  EXPECT_THROW(run_suite(c), std::invalid_argument);
  c = config("clifford");
  c.degree = -1;
  EXPECT_THROW(run_suite(c), std::invalid_argument);
  c = config("locality");
  c.f = std::vector<std::string>{};
  EXPECT_THROW(run_suite(c), std::invalid_argument);
  c.f = std::vector<std::string>{"e1 +"};
  EXPECT_THROW(run_suite(c), ParseError);
}

TEST(Suite, Names) { EXPECT_GE(suite_names().size(), 10u); }

TEST(EmitMatrix, YRows) {
  MatrixRequest req;
  req.kind = 'Y';
  req.a = 1;
  req.src = {Partition(), 0};
  req.cap = 3;
  auto doc = nlohmann::json::parse(emit_matrix(req, "json"));
  ASSERT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["rows"][0]["tgt"], "(;1)");
  EXPECT_EQ(doc["rows"][0]["z_exponent"], 0);
  EXPECT_EQ(doc["rows"][1]["pairing"], "(1/1)*t");
  std::string csv = emit_matrix(req, "csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "src,tgt,z_exponent,pairing,coefficient");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(EmitMatrix, WRows) {
  MatrixRequest req;
  req.kind = 'W';
  req.src = {Partition(), 0};
  req.cap = 2;
  auto doc = nlohmann::json::parse(emit_matrix(req, "json"));
  ASSERT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["rows"][1]["coefficient"], "(1/1)*c1");
}

TEST(EmitMatrix, EmptyRows) {
  MatrixRequest req;
  req.kind = 'Y';
  req.a = 1;
  req.src = {Partition({3}), 0};
  req.cap = 1;
  auto doc = nlohmann::json::parse(emit_matrix(req, "json"));
  EXPECT_TRUE(doc["rows"].is_array());
  EXPECT_TRUE(doc["rows"].empty());
  EXPECT_EQ(emit_matrix(req, "csv"), "src,tgt,z_exponent,pairing,coefficient\n");
  EXPECT_THROW(emit_matrix(req, "xml"), std::invalid_argument);
}

TEST(EmitStabilization, Csv) {
  ChargedPartition p{Partition({1}), 0};
  std::string csv = emit_stabilization("1", p, p, 6, "csv");
  EXPECT_NE(csv.find("true"), std::string::npos);
}
