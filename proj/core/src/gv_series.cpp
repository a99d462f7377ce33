#include "cy4gv/gv_series.hpp"

#include "cy4gv/error.hpp"

namespace cy4gv {

namespace {

void require_cover(const GVTable& table, std::int64_t cutoff, const char* what) {
  if (cutoff > table.degree_bound) {
    throw DomainError(std::string("outside table: ") + what + " requested to degree " + std::to_string(cutoff) +
                      " but tabulated to " + std::to_string(table.degree_bound));
  }
}

// Meeting part of the genus-1 coefficient at beta.
Rational meeting_term(const CurveClass& beta, const MeetingTable& meeting) {
  Rational out;
  for (const auto& [k, base] : divisors_of(beta)) {
    if (base.degree(meeting.ample()) < 2) continue;
    for (const auto& [b1, b2] : decompositions(base)) out += meeting.at(b1, b2) * Rational(1, k);
  }
  return out / Rational(24);
}

}  // namespace

Rational GVTable::at(const CurveClass& beta) const {
  if (!beta.is_effective()) throw DomainError("not effective: " + beta.str());
  if (beta.degree(ample) > degree_bound) throw DomainError("outside table: " + beta.str());
  auto it = entries.find(beta);
  return it == entries.end() ? Rational(0) : it->second;
}

bool GVTable::same_values(const GVTable& other) const {
  if (genus != other.genus || ample != other.ample || degree_bound != other.degree_bound) return false;
  for (const auto& [beta, v] : entries) {
    if (other.at(beta) != v) return false;
  }
  for (const auto& [beta, v] : other.entries) {
    if (at(beta) != v) return false;
  }
  return true;
}

GVTable gv0_table(const GeometryData& geom, const H4Class& gamma) {
  GVTable out{0, geom.ample, geom.degree_bound, {}};
  for (const auto& [beta, values] : geom.gv0) {
    Rational v = n0(geom, beta, gamma);
    if (!v.is_zero()) out.entries.emplace(beta, v);
  }
  return out;
}

GVTable gv1_table(const GeometryData& geom) {
  GVTable out{1, geom.ample, geom.genus1_degree_bound, {}};
  for (const auto& [beta, v] : geom.gv1) {
    if (!v.is_zero()) out.entries.emplace(beta, v);
  }
  return out;
}

NovikovSeries gw0_from_gv0(const GVTable& gv0, std::int64_t cutoff) {
  require_cover(gv0, cutoff, "genus-0 series");
  NovikovSeries out(gv0.ample, cutoff);
  for (const auto& [beta, n] : gv0.entries) {
    const auto d = beta.degree(gv0.ample);
    for (std::int64_t k = 1; k * d <= cutoff; ++k) out.add_term(k * beta, n / Rational(k * k));
  }
  return out;
}

NovikovSeries gw0_from_gv0(const GeometryData& geom, std::size_t a, std::int64_t cutoff) {
  if (a >= geom.h4_rank()) throw DomainError("S-index out of range");
  H4Class unit(geom.h4_rank());
  unit[a] = 1;
  return gw0_from_gv0(gv0_table(geom, unit), cutoff);
}

NovikovSeries gw0_from_gv0(const GeometryData& geom, const H4Class& gamma, std::int64_t cutoff) {
  return gw0_from_gv0(gv0_table(geom, gamma), cutoff);
}

GVTable gv0_from_gw0(const NovikovSeries& series) {
  GVTable out{0, series.ample(), series.cutoff(), {}};
  for (const auto& beta : effective_classes(series.ample(), series.cutoff())) {
    Rational n = series.coefficient(beta);
    for (const auto& [k, base] : divisors_of(beta)) {
      if (k > 1) n -= out.at(base) / Rational(k * k);
    }
    if (!n.is_zero()) out.entries.emplace(beta, n);
  }
  return out;
}

std::int64_t sigma(std::int64_t d) {
  if (d < 1) throw DomainError("sigma requires d >= 1");
  std::int64_t s = 0;
  for (std::int64_t i = 1; i * i <= d; ++i) {
    if (d % i == 0) s += i + (i * i == d ? 0 : d / i);
  }
  return s;
}

NovikovSeries gw1_from_gv1(const GVTable& gv1, const GVTable& n0_c2, const MeetingTable& meeting,
                           std::int64_t cutoff) {
  require_cover(gv1, cutoff, "genus-1 series");
  require_cover(n0_c2, cutoff, "genus-0 c2 series");
  if (meeting.degree_bound() < cutoff) throw DomainError("incomplete meeting table for cutoff " + std::to_string(cutoff));
  NovikovSeries out(gv1.ample, cutoff);
  for (const auto& beta : effective_classes(gv1.ample, cutoff)) {
    Rational c;
    for (const auto& [k, base] : divisors_of(beta)) {
      c += Rational(sigma(k), k) * gv1.at(base);
      c -= n0_c2.at(base) / Rational(24 * k);
    }
    c += meeting_term(beta, meeting);
    out.add_term(beta, c);
  }
  return out;
}

NovikovSeries gw1_from_gv1(const GeometryData& geom, const MeetingTable& meeting, std::int64_t cutoff) {
  return gw1_from_gv1(gv1_table(geom), gv0_table(geom, geom.c2), meeting, cutoff);
}

GVTable gv1_from_gw1(const NovikovSeries& series, const GVTable& n0_c2, const MeetingTable& meeting) {
  const auto cutoff = series.cutoff();
  require_cover(n0_c2, cutoff, "genus-0 c2 series");
  if (meeting.degree_bound() < cutoff) throw DomainError("incomplete meeting table for cutoff " + std::to_string(cutoff));
  GVTable out{1, series.ample(), cutoff, {}};
  for (const auto& beta : effective_classes(series.ample(), cutoff)) {
    Rational n = series.coefficient(beta) - meeting_term(beta, meeting);
    for (const auto& [k, base] : divisors_of(beta)) {
      n += n0_c2.at(base) / Rational(24 * k);
      if (k > 1) n -= Rational(sigma(k), k) * out.at(base);
    }
    if (!n.is_zero()) out.entries.emplace(beta, n);
  }
  return out;
}

GVTable gv1_from_gw1(const GeometryData& geom, const NovikovSeries& series, const MeetingTable& meeting) {
  return gv1_from_gw1(series, gv0_table(geom, geom.c2), meeting);
}

}  // namespace cy4gv
