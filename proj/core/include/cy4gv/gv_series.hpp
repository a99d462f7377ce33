#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/meeting.hpp"
#include "cy4gv/novikov_series.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// GV invariants of one genus (and, in genus 0, one fixed insertion).
/// Entries absent from the map but within degree_bound are zero.
struct GVTable {
  int genus = 0;
  std::vector<std::int64_t> ample;
  std::int64_t degree_bound = 0;
  std::map<CurveClass, Rational> entries;

  /// Throws DomainError("outside table") past the bound.
  [[nodiscard]] Rational at(const CurveClass& beta) const;
  /// Equality up to stored zeros.
  [[nodiscard]] bool same_values(const GVTable& other) const;
};

/// beta -> n_{0,beta}(gamma) over the geometry's table.
GVTable gv0_table(const GeometryData& geom, const H4Class& gamma);
/// beta -> n_{1,beta} up to the geometry's genus-1 bound.
GVTable gv1_table(const GeometryData& geom);

/// Genus-0 multiple cover transform: coefficient at beta is
/// sum_{k | beta} n_{beta/k} / k^2.
NovikovSeries gw0_from_gv0(const GVTable& gv0, std::int64_t cutoff);
/// The same for the insertion S_a of the geometry.
NovikovSeries gw0_from_gv0(const GeometryData& geom, std::size_t a, std::int64_t cutoff);
NovikovSeries gw0_from_gv0(const GeometryData& geom, const H4Class& gamma, std::int64_t cutoff);

/// Inverse of gw0_from_gv0, by induction on divisibility.
GVTable gv0_from_gw0(const NovikovSeries& series);

/// Divisor sum sigma(d); throws DomainError for d < 1.
std::int64_t sigma(std::int64_t d);

/// Genus-1 transform:
///   sum_{k|beta} sigma(k)/k n1_{beta/k} - 1/24 sum_{k|beta} n0c2_{beta/k}/k
///   + 1/24 sum_{k(b1+b2)=beta} m_{b1,b2}/k  (ordered pairs).
NovikovSeries gw1_from_gv1(const GVTable& gv1, const GVTable& n0_c2, const MeetingTable& meeting,
                           std::int64_t cutoff);
NovikovSeries gw1_from_gv1(const GeometryData& geom, const MeetingTable& meeting, std::int64_t cutoff);

/// Inverse of gw1_from_gv1, by induction on degree.
GVTable gv1_from_gw1(const NovikovSeries& series, const GVTable& n0_c2, const MeetingTable& meeting);
GVTable gv1_from_gw1(const GeometryData& geom, const NovikovSeries& series, const MeetingTable& meeting);

}  // namespace cy4gv
