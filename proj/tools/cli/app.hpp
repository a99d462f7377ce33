#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cy4gv::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kFixture = 3 };

/// Parses "1,2/3,-4" into rationals; throws DomainError.
std::vector<std::string> split_commas(const std::string& text);

/// Entire command-line driver. `fixture_dir` is where geometry-less
/// invocations look for the shipped fixtures.
int run_app(int argc, const char* const* argv, const std::string& fixture_dir, std::ostream& out, std::ostream& err);

}  // namespace cy4gv::cli
