#include "cy4gv/heuristic.hpp"

#include "cy4gv/error.hpp"

namespace cy4gv {

namespace {

void require_off_pole(const Rational& alpha_beta) {
  if (alpha_beta.is_zero()) throw DomainError("pole locus: alpha.beta = 0");
}

}  // namespace

Rational blowup_descendent(const BlowupFamilyData& data) {
  require_off_pole(data.alpha_beta);
  // alpha.beta = -2b and alpha.beta_1 = -b - d_i.
  const Rational b = -data.alpha_beta / Rational(2);
  std::vector<Rational> d;
  for (const auto& ab1 : data.alpha_beta1) d.push_back(-b - ab1);
  Rational sum_d, sum_d2;
  for (const auto& x : d) {
    sum_d += x;
    sum_d2 += x * x;
  }
  // alpha|^2 = b^2 psi^2 - sum d^2 - 4ab - 2b sum d, linear in a.
  const Rational a = (b * b * data.psi_sq - sum_d2 - Rational(2) * b * sum_d - data.alpha_sq) / (Rational(4) * b);
  // -1/2 psi . alpha| = a - b psi^2/2 + sum d / 2.
  return a - b * data.psi_sq / Rational(2) + sum_d / Rational(2);
}

Rational blowup_descendent_closed_form(const BlowupFamilyData& data) {
  require_off_pole(data.alpha_beta);
  const Rational& t = data.alpha_beta;
  Rational out = data.alpha_sq / (Rational(2) * t) + t * data.psi_sq / Rational(8);
  for (const auto& ab1 : data.alpha_beta1) {
    const Rational diff = ab1 - (t - ab1);
    out += diff * diff / (Rational(8) * t);
  }
  return out;
}

Rational assemble_rational_contribution(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                                        const RationalVector& alpha) {
  const Rational t = pairing(geom, alpha, beta);
  require_off_pole(t);
  Rational msum, degenerations;
  for (const auto& [b1, b2] : decompositions(beta)) {
    const Rational m = meeting.at(b1, b2);
    msum += m;
    const Rational diff = pairing(geom, alpha, b1) - pairing(geom, alpha, b2);
    degenerations += diff * diff / (Rational(8) * t) * m / Rational(2);
  }
  const Rational psi_sq = -msum / Rational(2);
  return n0(geom, beta, divisor_square(geom, alpha)) / (Rational(2) * t) + t * psi_sq / Rational(8) + degenerations;
}

Rational elliptic_multiple_contribution(std::int64_t r, const Rational& alpha_beta) {
  if (r < 1) throw DomainError("elliptic multiple cover needs r >= 1");
  return alpha_beta / Rational(r);
}

Rational elliptic_contribution(const GeometryData& geom, const CurveClass& beta, const RationalVector& alpha) {
  const Rational t = pairing(geom, alpha, beta);
  Rational out;
  for (const auto& [r, base] : divisors_of(beta)) out += elliptic_multiple_contribution(r, t) * n1(geom, base);
  return out;
}

}  // namespace cy4gv
