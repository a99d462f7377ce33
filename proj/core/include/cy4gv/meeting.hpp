#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// Symmetric table of meeting invariants m_{b1,b2}, complete for every
/// effective pair with deg(b1) + deg(b2) <= degree_bound.
class MeetingTable {
 public:
  MeetingTable(std::vector<std::int64_t> ample, std::int64_t degree_bound);

  [[nodiscard]] std::int64_t degree_bound() const { return degree_bound_; }
  [[nodiscard]] const std::vector<std::int64_t>& ample() const { return ample_; }

  /// m_{b1,b2}. Zero if either argument is not effective. Throws
  /// DomainError("incomplete meeting table") past the degree bound.
  [[nodiscard]] Rational at(const CurveClass& b1, const CurveClass& b2) const;
  [[nodiscard]] bool covers(const CurveClass& b1, const CurveClass& b2) const;

  /// Stored entries keyed by the canonical (smaller, larger) ordering.
  [[nodiscard]] const std::map<std::pair<CurveClass, CurveClass>, Rational>& entries() const { return entries_; }

  void set(const CurveClass& b1, const CurveClass& b2, const Rational& value);
  /// Copy with one entry overwritten (both orderings, since the table is
  /// symmetric by construction).
  [[nodiscard]] MeetingTable with_entry(const CurveClass& b1, const CurveClass& b2, const Rational& value) const;

 private:
  static std::pair<CurveClass, CurveClass> key(const CurveClass& b1, const CurveClass& b2);

  std::vector<std::int64_t> ample_;
  std::int64_t degree_bound_;
  std::map<std::pair<CurveClass, CurveClass>, Rational> entries_;
};

/// Runs the recursion bottom-up in total degree. degree_bound must not
/// exceed the geometry's table bound.
MeetingTable meeting_table(const GeometryData& geom, std::int64_t degree_bound);

/// Table up to the geometry's own degree bound.
MeetingTable meeting_table(const GeometryData& geom);

}  // namespace cy4gv
