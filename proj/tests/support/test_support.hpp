#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cy4gv/geometry.hpp"
#include "cy4gv/gv_series.hpp"
#include "cy4gv/meeting.hpp"

namespace cy4gv::testing {

inline std::string fixture_path(const std::string& name) { return std::string(CY4GV_FIXTURE_DIR) + "/" + name + ".json"; }

inline const GeometryData& fixture(const std::string& name) {
  static std::map<std::string, GeometryData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_geometry(fixture_path(name))).first;
  return it->second;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"elliptic_p3", "local_p3", "local_p2", "local_p1p1",
                                                 "cy3xE_template"};
  return names;
}

// Naive multiple-cover sums, written without divisors_of so they can serve
// as oracles for the library's transforms.
inline bool divides(std::int64_t k, const CurveClass& beta) {
  for (auto c : beta.coords()) {
    if (c % k != 0) return false;
  }
  return true;
}

inline CurveClass quotient(const CurveClass& beta, std::int64_t k) {
  std::vector<std::int64_t> q;
  for (auto c : beta.coords()) q.push_back(c / k);
  return CurveClass(q);
}

inline std::int64_t max_coord(const CurveClass& beta) {
  std::int64_t m = 0;
  for (auto c : beta.coords()) m = std::max(m, c);
  return m;
}

/// Random GV table with small integer entries, rank 1 or 2.
struct RandomTables {
  GVTable gv0;
  GVTable gv1;
  GVTable n0c2;
  MeetingTable meeting;
};

inline RandomTables random_tables(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<int> rank_pick(1, 2);
  std::uniform_int_distribution<std::int64_t> weight(1, 2);
  std::uniform_int_distribution<std::int64_t> value(-50, 50);
  std::vector<std::int64_t> ample;
  const int rank = rank_pick(rng);
  for (int i = 0; i < rank; ++i) ample.push_back(weight(rng));
  RandomTables t{{0, ample, bound, {}}, {1, ample, bound, {}}, {0, ample, bound, {}}, MeetingTable(ample, bound)};
  for (const auto& beta : effective_classes(ample, bound)) {
    t.gv0.entries[beta] = Rational(value(rng));
    t.gv1.entries[beta] = Rational(value(rng));
    t.n0c2.entries[beta] = Rational(value(rng));
    for (const auto& other : effective_classes(ample, bound - beta.degree(ample))) {
      if (beta <= other) t.meeting.set(beta, other, Rational(value(rng)));
    }
  }
  return t;
}

}  // namespace cy4gv::testing
