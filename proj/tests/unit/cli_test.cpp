#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "support/test_support.hpp"

using namespace cy4gv;
using namespace cy4gv::cli;
using cy4gv::testing::fixture;
using cy4gv::testing::fixture_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cy4gv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_app(static_cast<int>(argv.size()), argv.data(), CY4GV_FIXTURE_DIR, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cy4gv_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, AllOnLocalP3) {
  const auto r = run({"all", "--geometry", fixture_path("local_p3")});
  EXPECT_EQ(r.code, kPass) << r.out << r.err;
  EXPECT_NE(r.out.find("expected -30, got -30"), std::string::npos);
  EXPECT_NE(r.out.find("expected -22610, got -22610"), std::string::npos);
}

TEST(Cli, ConstraintWithCutoff) {
  const auto r = run({"constraint", "--geometry", fixture_path("local_p1p1"), "--cutoff", "6"});
  EXPECT_EQ(r.code, kPass) << r.out;
}

TEST(Cli, Dt4Example) {
  const auto r = run({"dt4", "local_p2", "--alpha", "1"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("value 3/2"), std::string::npos) << r.out;
  const auto json = temp_file("dt4.json");
  EXPECT_EQ(run({"dt4", "local_p1p1", "--alpha", "1,2/3", "--json", json}).code, kPass);
  EXPECT_NE(slurp(json).find("\"-10/3\""), std::string::npos) << slurp(json);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"meeting", "--bogus"}).code, kUsage);
  EXPECT_EQ(run({"all", "--cutoff", "abc"}).code, kUsage);
  EXPECT_EQ(run({"dt4", "nowhere"}).code, kUsage);
  EXPECT_EQ(run({"dt4", "local_p2", "--alpha", "1/0"}).code, kUsage);
  EXPECT_EQ(run({"conjecture", "--geometry", fixture_path("local_p2"), "--alpha", "1,2"}).code, kUsage);
}

TEST(Cli, FixtureErrors) {
  EXPECT_EQ(run({"meeting", "--geometry", "/nonexistent.json"}).code, kFixture);
  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << "{\"name\": 3}";
  const auto r = run({"all", "--geometry", bad});
  EXPECT_EQ(r.code, kFixture);
  EXPECT_NE(r.err.find("/name"), std::string::npos) << r.err;
}

TEST(Cli, JsonReportReparses) {
  const auto path = temp_file("report.json");
  const auto r = run({"meeting", "--geometry", fixture_path("local_p1p1"), "--json", path});
  ASSERT_EQ(r.code, kPass);
  const auto parsed = report_from_json(slurp(path));
  EXPECT_EQ(parsed, run_meeting_suite(fixture("local_p1p1"), SuiteOptions{}));
  EXPECT_TRUE(parsed.pass());

  const auto all = temp_file("all.json");
  ASSERT_EQ(run({"all", "--geometry", fixture_path("local_p2"), "--json", all}).code, kPass);
  const auto reports = reports_from_json(slurp(all));
  ASSERT_EQ(reports.size(), kSuiteNames.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i], run_suite(kSuiteNames[i], fixture("local_p2"), SuiteOptions{}));
  }
}

TEST(Cli, ReportJsonRoundTripAndPassFlag) {
  Report rep{"g", "meeting", {}};
  rep.expect_equal("a", Rational(1, 2), Rational(1, 2));
  rep.expect_equal("b", Rational(3), Rational(-3));
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(report_from_json(to_json(rep)), rep);
  EXPECT_EQ(rep.checks[1].actual, "-3");
  // A pass flag that contradicts the checks is rejected.
  auto text = to_json(rep);
  text.replace(text.rfind("false"), 5, "true");
  EXPECT_THROW(report_from_json(text), std::exception);
  EXPECT_FALSE(Report{}.pass());
}

TEST(Cli, FailingCheckGivesExitOne) {
  // A fixture with a wrong meeting-relevant GV entry fails the reference-value checks.
  auto text = slurp(fixture_path("local_p2"));
  const auto pos = text.find("\"-1\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 4, "\"-5\"");
  const auto path = temp_file("local_p2_bad.json");
  std::ofstream(path) << text;
  EXPECT_EQ(run({"meeting", "--geometry", path}).code, kCheckFailed);
}

TEST(Cli, SplitCommas) { EXPECT_EQ(split_commas("1, 2/3,-4"), (std::vector<std::string>{"1", "2/3", "-4"})); }
