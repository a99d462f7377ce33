#pragma once

#include <cstdint>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/meeting.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// Two sides of an identity that should hold exactly.
struct Sides {
  Rational lhs;
  Rational rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// n_{0,beta}(alpha^2) against 1/2 sum_{b1+b2=beta} (alpha.b1)(alpha.b2) m_{b1,b2}.
/// Throws DomainError unless alpha . beta = 0.
Sides constraint_gv_form(const GeometryData& geom, const MeetingTable& meeting, const RationalVector& alpha,
                         const CurveClass& beta);

/// The same identity with the meeting recursion solved: a sum over coprime
/// (k1, k2) of genus-0 products.
Sides constraint_resummed(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta);

/// The identity in Gromov-Witten form, with the GW series built by the
/// multiple cover formula.
Sides constraint_gw_form(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta);

/// Integer spanning set of { alpha : alpha . beta = 0 } in divisor
/// coordinates.
std::vector<RationalVector> orthogonal_alphas(const GeometryData& geom, const CurveClass& beta);

/// Closed-form GW_{0,(d1,d2)}(pt) = C(d1+d2,d1)^2/(d1+d2)^2 of the local
/// P1xP1 geometry, including the d1 = 0 or d2 = 0 edges (1/d^2).
Rational local_p1p1_gw_pt(std::int64_t d1, std::int64_t d2);

/// The genus-0 recursion of local P1xP1 checked against the closed form,
/// summing over all effective ordered splittings. Throws DomainError
/// ("degenerate bidegree") when d1 or d2 is 0.
Sides binomial_recursion_check(std::int64_t d1, std::int64_t d2);

enum class BinomialReading {
  /// Every split component strictly positive, binomials to the first power.
  strict,
  /// Components non-negative with both parts nonzero, binomials squared.
  nonzero_pairs,
};

/// The binomial identity obtained by combining the recursion with the
/// closed form, 2 d1 d2 C^2/(d1+d2)^2 on the left, under the given reading
/// of its summation range.
Sides printed_binomial_display(std::int64_t d1, std::int64_t d2, BinomialReading reading);

}  // namespace cy4gv
