#pragma once

#include <string>
#include <vector>

#include "cy4gv/rational.hpp"

namespace cy4gv::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string geometry;
  std::string suite;
  std::vector<Check> checks;

  /// True iff every check passed (and there is at least one).
  [[nodiscard]] bool pass() const;

  void expect_equal(std::string name, const Rational& expected, const Rational& actual);
  void expect_true(std::string name, bool ok, std::string expected = "true", std::string actual = "");

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_json(const Report& report);
std::string to_json(const std::vector<Report>& reports);
/// Accepts a single report object.
Report report_from_json(const std::string& text);
/// Accepts a single object or an array of them.
std::vector<Report> reports_from_json(const std::string& text);

/// Human-readable table, one line per check.
std::string to_text(const Report& report);

}  // namespace cy4gv::cli
