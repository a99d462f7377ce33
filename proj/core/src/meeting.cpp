#include "cy4gv/meeting.hpp"

#include "cy4gv/error.hpp"

namespace cy4gv {

MeetingTable::MeetingTable(std::vector<std::int64_t> ample, std::int64_t degree_bound)
    : ample_(std::move(ample)), degree_bound_(degree_bound) {}

std::pair<CurveClass, CurveClass> MeetingTable::key(const CurveClass& b1, const CurveClass& b2) {
  return b1 <= b2 ? std::make_pair(b1, b2) : std::make_pair(b2, b1);
}

bool MeetingTable::covers(const CurveClass& b1, const CurveClass& b2) const {
  return b1.degree(ample_) + b2.degree(ample_) <= degree_bound_;
}

Rational MeetingTable::at(const CurveClass& b1, const CurveClass& b2) const {
  if (!b1.is_effective() || !b2.is_effective()) return Rational(0);
  if (!covers(b1, b2)) {
    throw DomainError("incomplete meeting table: m" + b1.str() + b2.str() + " beyond degree " +
                      std::to_string(degree_bound_));
  }
  auto it = entries_.find(key(b1, b2));
  if (it == entries_.end()) throw InternalError("meeting entry " + b1.str() + b2.str() + " was never computed");
  return it->second;
}

void MeetingTable::set(const CurveClass& b1, const CurveClass& b2, const Rational& value) {
  if (!b1.is_effective() || !b2.is_effective()) throw DomainError("meeting entries need effective classes");
  entries_[key(b1, b2)] = value;
}

MeetingTable MeetingTable::with_entry(const CurveClass& b1, const CurveClass& b2, const Rational& value) const {
  MeetingTable out = *this;
  out.set(b1, b2, value);
  return out;
}

MeetingTable meeting_table(const GeometryData& geom, std::int64_t degree_bound) {
  if (degree_bound > geom.degree_bound) {
    throw DomainError("outside table: meeting bound " + std::to_string(degree_bound) + " exceeds GV table bound " +
                      std::to_string(geom.degree_bound));
  }
  MeetingTable table(geom.ample, degree_bound);
  const auto classes = effective_classes(geom.ample, degree_bound);

  auto pair_term = [&](const CurveClass& b1, const CurveClass& b2) {
    return kunneth_pairing(geom, n0_vector(geom, b1), n0_vector(geom, b2));
  };

  // Level D holds every pair of total degree D; all rule-(iii) and rule-(iv)
  // references point to strictly lower levels.
  for (std::int64_t level = 2; level <= degree_bound; ++level) {
    for (const auto& b1 : classes) {
      const auto d1 = b1.degree(geom.ample);
      if (2 * d1 > level) break;
      for (const auto& b2 : classes) {
        if (d1 + b2.degree(geom.ample) != level || (d1 * 2 == level && b2 < b1)) continue;
        Rational m = pair_term(b1, b2);
        if (b1 == b2) {
          m += n0(geom, b1, geom.c2);
          for (const auto& [x, y] : decompositions(b1)) m -= table.at(x, y);
        } else {
          m += table.at(b1, b2 - b1);
          m += table.at(b1 - b2, b2);
        }
        table.set(b1, b2, m);
      }
    }
  }
  return table;
}

MeetingTable meeting_table(const GeometryData& geom) { return meeting_table(geom, geom.degree_bound); }

}  // namespace cy4gv
