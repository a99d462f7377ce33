#include "cy4gv/conjecture.hpp"

#include <random>
#include <sstream>

#include "cy4gv/error.hpp"

namespace cy4gv {

RhsTerms rhs_terms(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                   const RationalVector& alpha) {
  const Rational ab = pairing(geom, alpha, beta);
  if (ab.is_zero()) throw DomainError("pole locus: use constraints module");
  RhsTerms t;
  t.genus0 = n0(geom, beta, divisor_square(geom, alpha)) / (Rational(2) * ab);
  for (const auto& [b1, b2] : decompositions(beta)) {
    t.meeting -= pairing(geom, alpha, b1) * pairing(geom, alpha, b2) * meeting.at(b1, b2);
  }
  t.meeting /= Rational(4) * ab;
  for (const auto& [k, base] : divisors_of(beta)) t.genus1 -= ab / Rational(k) * n1(geom, base);
  t.total = t.genus0 + t.meeting + t.genus1;
  return t;
}

Rational rhs_genus1(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                    const RationalVector& alpha) {
  return rhs_terms(geom, meeting, beta, alpha).total;
}

Rational tau2_rhs(const GeometryData& geom, const CurveClass& beta) { return -n0(geom, beta, geom.c2) / Rational(12); }

namespace {

std::string render(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

LinearityReport rhs_is_linear(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                              int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 5);
  auto random_alpha = [&] {
    RationalVector a(geom.divisor_rank());
    for (auto& x : a) x = Rational(num(rng), den(rng));
    return a;
  };
  auto off_pole = [&](const RationalVector& a) { return !pairing(geom, a, beta).is_zero(); };

  LinearityReport report;
  int attempts = 0;
  while (report.trials < trials) {
    if (++attempts > 100 * trials + 100) throw DomainError("no alpha off the pole locus for " + beta.str());
    const auto a = random_alpha();
    const auto b = random_alpha();
    RationalVector sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    if (!off_pole(a) || !off_pole(b) || !off_pole(sum)) continue;
    ++report.trials;
    const Rational ra = rhs_genus1(geom, meeting, beta, a);
    const Rational rb = rhs_genus1(geom, meeting, beta, b);
    const Rational rs = rhs_genus1(geom, meeting, beta, sum);
    Rational c(num(rng), den(rng));
    if (c.is_zero()) c = Rational(3, 2);
    RationalVector scaled(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) scaled[i] = c * a[i];
    const Rational rc = rhs_genus1(geom, meeting, beta, scaled);
    if (rs != ra + rb || rc != c * ra) {
      report.passed = false;
      std::ostringstream os;
      os << "beta=" << beta << " alpha=" << render(a) << " alpha'=" << render(b) << ": rhs(alpha+alpha')=" << rs
         << " but rhs(alpha)+rhs(alpha')=" << (ra + rb);
      report.counterexample = os.str();
      break;
    }
  }
  return report;
}

Verdict compare(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                const RationalVector& alpha, const std::optional<Rational>& dt4_value) {
  Verdict v{VerdictKind::rhs_only, rhs_genus1(geom, meeting, beta, alpha), dt4_value};
  if (dt4_value) v.kind = *dt4_value == v.rhs ? VerdictKind::match : VerdictKind::mismatch;
  return v;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::match:
      return "match";
    case VerdictKind::mismatch:
      return "mismatch";
    case VerdictKind::rhs_only:
      return "RHS-only";
  }
  return "unknown";
}

}  // namespace cy4gv
