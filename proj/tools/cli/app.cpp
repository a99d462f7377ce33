#include "cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/suites.hpp"
#include "cy4gv/error.hpp"
#include "cy4gv/meeting.hpp"

namespace cy4gv::cli {

namespace fs = std::filesystem;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

namespace {

RationalVector parse_alpha(const std::string& text) {
  RationalVector out;
  for (const auto& p : split_commas(text)) out.push_back(Rational::parse(p));
  return out;
}

std::vector<fs::path> shipped_fixtures(const std::string& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) throw FixtureError("fixture directory not found: " + dir);
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << text << '\n';
}

struct Options {
  std::string geometry;
  std::int64_t cutoff = 8;
  std::string alpha;
  std::string json;
  bool table = false;
  std::string example;
  std::int64_t degree = 0;
};

int run_reports(const std::vector<std::string>& suites, const Options& o, const std::string& fixture_dir,
                std::ostream& out) {
  SuiteOptions so;
  so.cutoff = o.cutoff;
  if (!o.alpha.empty()) so.alpha = parse_alpha(o.alpha);

  std::vector<fs::path> paths;
  if (o.geometry.empty()) paths = shipped_fixtures(fixture_dir);
  else paths.push_back(o.geometry);

  std::vector<Report> reports;
  for (const auto& p : paths) {
    const auto geom = load_geometry(p.string());
    // A user alpha that does not fit this geometry's divisor lattice is skipped there.
    SuiteOptions local = so;
    if (local.alpha && local.alpha->size() != geom.divisor_rank()) {
      if (!o.geometry.empty()) {
        throw DomainError("--alpha needs " + std::to_string(geom.divisor_rank()) + " coefficients");
      }
      local.alpha.reset();
    }
    auto rs = run_suites(suites, geom, local);
    reports.insert(reports.end(), rs.begin(), rs.end());
  }

  std::size_t checks = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << to_text(r);
    checks += r.checks.size();
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  }
  out << (failed == 0 ? "ALL PASS" : "FAILURES") << ": " << checks - failed << "/" << checks << " checks in "
      << reports.size() << " reports\n";
  if (!o.json.empty()) write_file(o.json, reports.size() == 1 ? to_json(reports.front()) : to_json(reports));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass(); });
  return ok ? kPass : kCheckFailed;
}

int print_table(const Options& o, std::ostream& out) {
  if (o.geometry.empty()) throw DomainError("--table needs --geometry");
  const auto geom = load_geometry(o.geometry);
  const auto table = meeting_table(geom);
  for (const auto& [key, v] : table.entries()) {
    out << "m_{" << key.first.str() << "," << key.second.str() << "} = " << v << '\n';
  }
  return kPass;
}

int run_example(const Options& o, const std::string& fixture_dir, std::ostream& out) {
  std::optional<GeometryData> geom;
  if (!o.geometry.empty()) {
    geom = load_geometry(o.geometry);
  } else if (o.example == "elliptic_p3" || o.example == "cy3xE_template") {
    geom = load_geometry((fs::path(fixture_dir) / (o.example + ".json")).string());
  }
  std::optional<RationalVector> alpha;
  if (!o.alpha.empty()) alpha = parse_alpha(o.alpha);
  std::optional<std::int64_t> degree;
  if (o.degree > 0) degree = o.degree;
  const auto res = run_dt4_example(o.example, geom ? &*geom : nullptr, degree, alpha);
  out << res.geometry << " beta=" << res.beta.str() << " tau" << res.descendent << " unsigned "
      << res.unsigned_value << " sign " << res.orientation_sign << " value " << res.value << '\n';
  if (!o.json.empty()) write_file(o.json, to_json(res));
  return kPass;
}

}  // namespace

int run_app(int argc, const char* const* argv, const std::string& fixture_dir, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact checks of genus-0/1 curve counting identities on Calabi-Yau 4-fold fixtures", "cy4gv"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--geometry", o.geometry, "Geometry fixture (JSON); default: every shipped fixture");
    sub->add_option("--cutoff", o.cutoff, "Degree cutoff for series checks")->check(CLI::Range(1, 64));
    sub->add_option("--alpha", o.alpha, "Extra divisor class, comma-separated rationals");
    sub->add_option("--json", o.json, "Write the JSON report here");
  };
  for (const auto& name : kSuiteNames) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " suite");
    common(sub);
    if (name == "meeting") sub->add_flag("--table", o.table, "Print the meeting table instead");
    if (name == "dt4") {
      sub->add_option("example", o.example, "local_p2 | local_p1p1 | local_p3 | elliptic_p3 | cy3xE_template");
      sub->add_option("--degree", o.degree, "Curve degree for examples with a family")->check(CLI::PositiveNumber);
    }
  }
  common(app.add_subcommand("all", "Run every suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "meeting" && o.table) return print_table(o, out);
    if (cmd == "dt4" && !o.example.empty()) return run_example(o, fixture_dir, out);
    const auto suites = cmd == "all" ? kSuiteNames : std::vector<std::string>{cmd};
    return run_reports(suites, o, fixture_dir, out);
  } catch (const FixtureError& e) {
    err << "fixture error: " << e.what() << '\n';
    return kFixture;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cy4gv::cli
