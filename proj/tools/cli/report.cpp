#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cy4gv::cli {

using nlohmann::json;

bool Report::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::expect_equal(std::string name, const Rational& expected, const Rational& actual) {
  checks.push_back({std::move(name), expected.str(), actual.str(), expected == actual});
}

void Report::expect_true(std::string name, bool ok, std::string expected, std::string actual) {
  if (actual.empty()) actual = ok ? "true" : "false";
  checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

namespace {

json to_object(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return {{"geometry", r.geometry}, {"suite", r.suite}, {"checks", checks}, {"pass", r.pass()}};
}

Report from_object(const json& j) {
  Report r;
  r.geometry = j.at("geometry").get<std::string>();
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                        c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
  }
  if (j.at("pass").get<bool>() != r.pass()) throw std::runtime_error("report pass flag disagrees with its checks");
  return r;
}

}  // namespace

std::string to_json(const Report& report) { return to_object(report).dump(2); }

std::string to_json(const std::vector<Report>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_object(r));
  return arr.dump(2);
}

Report report_from_json(const std::string& text) { return from_object(json::parse(text)); }

std::vector<Report> reports_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<Report> out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(from_object(x));
  } else {
    out.push_back(from_object(j));
  }
  return out;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "[" << report.suite << "] " << report.geometry << "\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  expected " << c.expected << ", got " << c.actual
       << "\n";
  }
  os << "  => " << (report.pass() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace cy4gv::cli
