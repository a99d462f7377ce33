#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/meeting.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// The three pieces of the predicted <tau_1(alpha)>_beta.
struct RhsTerms {
  /// n_{0,beta}(alpha^2) / (2 alpha.beta)
  Rational genus0;
  /// -sum_{b1+b2=beta} (alpha.b1)(alpha.b2) m_{b1,b2} / (4 alpha.beta)
  Rational meeting;
  /// -sum_{k|beta} (alpha.beta / k) n_{1,beta/k}
  Rational genus1;
  Rational total;
};

/// Throws DomainError("pole locus: use constraints module") when
/// alpha . beta = 0.
RhsTerms rhs_terms(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                   const RationalVector& alpha);
Rational rhs_genus1(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                    const RationalVector& alpha);

/// Predicted <tau_2(1)>_beta = -n_{0,beta}(c_2)/12.
Rational tau2_rhs(const GeometryData& geom, const CurveClass& beta);

struct LinearityReport {
  bool passed = true;
  int trials = 0;
  /// First failing sample, if any.
  std::optional<std::string> counterexample;
};

/// Checks additivity rhs(a + a') = rhs(a) + rhs(a') and scaling
/// rhs(c a) = c rhs(a) on random rational a, a' off the pole locus.
LinearityReport rhs_is_linear(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                              int trials, std::uint64_t seed = 0x5eed);

enum class VerdictKind { match, mismatch, rhs_only };

struct Verdict {
  VerdictKind kind;
  Rational rhs;
  std::optional<Rational> dt4;
};

/// Exact comparison of the prediction with a DT4 value; rhs_only when no
/// DT4 value is available.
Verdict compare(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                const RationalVector& alpha, const std::optional<Rational>& dt4_value);

std::string to_string(VerdictKind kind);

}  // namespace cy4gv
