#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "cy4gv/dt4_examples.hpp"
#include "cy4gv/geometry.hpp"

namespace cy4gv::cli {

struct SuiteOptions {
  std::int64_t cutoff = 8;
  /// Extra divisor class to evaluate the tau_1 checks at.
  std::optional<RationalVector> alpha;
  std::uint64_t seed = 20240229;
};

inline const std::vector<std::string> kSuiteNames = {"meeting", "constraint", "dt4", "conjecture", "heuristic"};

Report run_meeting_suite(const GeometryData& geom, const SuiteOptions& opts);
Report run_constraint_suite(const GeometryData& geom, const SuiteOptions& opts);
Report run_dt4_suite(const GeometryData& geom, const SuiteOptions& opts);
Report run_conjecture_suite(const GeometryData& geom, const SuiteOptions& opts);
Report run_heuristic_suite(const GeometryData& geom, const SuiteOptions& opts);

Report run_suite(const std::string& name, const GeometryData& geom, const SuiteOptions& opts);
/// Runs the named suites concurrently; results come back in input order.
std::vector<Report> run_suites(const std::vector<std::string>& names, const GeometryData& geom,
                               const SuiteOptions& opts);

/// Evaluates the example's tau_1 pipeline at its worked curve class (or
/// `degree` where the example has a family), with alpha defaulting to the
/// first divisor. Elliptic and product examples need their fixture.
Dt4Result run_dt4_example(const std::string& example, const GeometryData* geom, std::optional<std::int64_t> degree,
                          const std::optional<RationalVector>& alpha);

std::string to_json(const Dt4Result& result);

}  // namespace cy4gv::cli
