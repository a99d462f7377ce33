#include "cy4gv/constraints.hpp"

#include <algorithm>
#include <numeric>

#include "cy4gv/error.hpp"

namespace cy4gv {

namespace {

void require_orthogonal(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta) {
  if (!pairing(geom, alpha, beta).is_zero()) throw DomainError("constraint requires alpha·beta = 0");
}

// GW_{0,beta}(S_a) for every a, by the multiple cover formula.
RationalVector gw0_vector(const GeometryData& geom, const CurveClass& beta) {
  RationalVector out(geom.h4_rank());
  for (const auto& [k, base] : divisors_of(beta)) {
    const auto& n = n0_vector(geom, base);
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += n[a] / Rational(k * k);
  }
  return out;
}

bool divisible(const CurveClass& b, std::int64_t k) {
  return std::all_of(b.coords().begin(), b.coords().end(), [k](std::int64_t c) { return c % k == 0; });
}

}  // namespace

Sides constraint_gv_form(const GeometryData& geom, const MeetingTable& meeting, const RationalVector& alpha,
                         const CurveClass& beta) {
  require_orthogonal(geom, alpha, beta);
  Sides s{n0(geom, beta, divisor_square(geom, alpha)), Rational(0)};
  for (const auto& [b1, b2] : decompositions(beta)) {
    s.rhs += pairing(geom, alpha, b1) * pairing(geom, alpha, b2) * meeting.at(b1, b2);
  }
  s.rhs /= Rational(2);
  return s;
}

Sides constraint_resummed(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta) {
  require_orthogonal(geom, alpha, beta);
  Sides s{n0(geom, beta, divisor_square(geom, alpha)), Rational(0)};
  const auto max_k = *std::max_element(beta.coords().begin(), beta.coords().end());
  const auto splits = decompositions(beta);
  for (std::int64_t k1 = 1; k1 <= max_k; ++k1) {
    for (std::int64_t k2 = 1; k2 <= max_k; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      for (const auto& [b1, b2] : splits) {
        if (!divisible(b1, k1) || !divisible(b2, k2)) continue;
        const Rational w = pairing(geom, alpha, b1) * pairing(geom, alpha, b2);
        if (w.is_zero()) continue;
        s.rhs += w / Rational(k1 * k1 * k2 * k2) *
                 kunneth_pairing(geom, n0_vector(geom, b1.divided_by(k1)), n0_vector(geom, b2.divided_by(k2)));
      }
    }
  }
  s.rhs /= Rational(2);
  return s;
}

Sides constraint_gw_form(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta) {
  require_orthogonal(geom, alpha, beta);
  const H4Class sq = divisor_square(geom, alpha);
  Sides s;
  const auto gw_beta = gw0_vector(geom, beta);
  for (std::size_t a = 0; a < sq.size(); ++a) s.lhs += sq[a] * gw_beta[a];
  for (const auto& [b1, b2] : decompositions(beta)) {
    const Rational w = pairing(geom, alpha, b1) * pairing(geom, alpha, b2);
    if (w.is_zero()) continue;
    s.rhs += w * kunneth_pairing(geom, gw0_vector(geom, b1), gw0_vector(geom, b2));
  }
  s.rhs /= Rational(2);
  return s;
}

std::vector<RationalVector> orthogonal_alphas(const GeometryData& geom, const CurveClass& beta) {
  const auto p = geom.divisor_rank();
  std::vector<Rational> v(p);
  for (std::size_t i = 0; i < p; ++i) {
    RationalVector e(p);
    e[i] = 1;
    v[i] = pairing(geom, e, beta);
  }
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < p; ++i) {
    if (v[i].is_zero()) {
      RationalVector e(p);
      e[i] = 1;
      out.push_back(e);
      continue;
    }
    for (std::size_t j = i + 1; j < p; ++j) {
      if (v[j].is_zero()) continue;
      RationalVector a(p);
      a[i] = v[j];
      a[j] = -v[i];
      out.push_back(a);
    }
  }
  return out;
}

Rational local_p1p1_gw_pt(std::int64_t d1, std::int64_t d2) {
  if (d1 < 0 || d2 < 0 || d1 + d2 == 0) throw DomainError("not effective: (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
  const auto n = d1 + d2;
  return binomial(n, d1).pow(2) / Rational(n * n);
}

Sides binomial_recursion_check(std::int64_t d1, std::int64_t d2) {
  if (d1 < 1 || d2 < 1) throw DomainError("degenerate bidegree");
  Sides s{local_p1p1_gw_pt(d1, d2), Rational(0)};
  for (const auto& [b1, b2] : decompositions(CurveClass{d1, d2})) {
    const auto w = b1[0] * b2[1] - b1[1] * b2[0];
    if (w == 0) continue;
    s.rhs += Rational(w * w, d1 * d2) * local_p1p1_gw_pt(b1[0], b1[1]) * local_p1p1_gw_pt(b2[0], b2[1]);
  }
  s.rhs /= Rational(2);
  return s;
}

Sides printed_binomial_display(std::int64_t d1, std::int64_t d2, BinomialReading reading) {
  if (d1 < 1 || d2 < 1) throw DomainError("degenerate bidegree");
  const auto n = d1 + d2;
  Sides s{Rational(2 * d1 * d2, n * n) * binomial(n, d1).pow(2), Rational(0)};
  const unsigned power = reading == BinomialReading::strict ? 1 : 2;
  for (const auto& [b1, b2] : decompositions(CurveClass{d1, d2})) {
    if (reading == BinomialReading::strict && (b1[0] == 0 || b1[1] == 0 || b2[0] == 0 || b2[1] == 0)) continue;
    const auto w = b1[0] * b2[1] - b1[1] * b2[0];
    const auto n1 = b1[0] + b1[1];
    const auto n2 = b2[0] + b2[1];
    s.rhs += Rational(w * w, n1 * n1 * n2 * n2) * binomial(n1, b1[0]).pow(power) * binomial(n2, b2[0]).pow(power);
  }
  return s;
}

}  // namespace cy4gv
