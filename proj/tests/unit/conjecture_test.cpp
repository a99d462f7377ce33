#include <gtest/gtest.h>

#include "cy4gv/conjecture.hpp"
#include "cy4gv/dt4_examples.hpp"
#include "cy4gv/error.hpp"
#include "support/test_support.hpp"

using namespace cy4gv;
using namespace cy4gv::testing;

namespace {

Rational naive_rhs(const GeometryData& g, const MeetingTable& m, const CurveClass& beta, const RationalVector& a) {
  const Rational ab = pairing(g, a, beta);
  Rational out = n0(g, beta, divisor_square(g, a)) / (Rational(2) * ab);
  for (const auto& b1 : effective_classes(g.ample, degree(g, beta))) {
    const auto b2 = beta - b1;
    if (!b2.is_effective()) continue;
    out -= pairing(g, a, b1) * pairing(g, a, b2) * m.at(b1, b2) / (Rational(4) * ab);
  }
  for (std::int64_t k = 1; k <= max_coord(beta); ++k) {
    if (divides(k, beta)) out -= ab / Rational(k) * n1(g, quotient(beta, k));
  }
  return out;
}

const std::vector<RationalVector> kRank2Samples = {
    {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(-3, 2), Rational(2, 7)}};

}  // namespace

TEST(Conjecture, EllipticFibration) {
  const auto& g = fixture("elliptic_p3");
  const auto m = meeting_table(g);
  for (std::int64_t r = 1; r <= 5; ++r) {
    for (const auto& a : kRank2Samples) {
      if (pairing(g, a, {r}).is_zero()) continue;
      EXPECT_EQ(rhs_genus1(g, m, {r}, a), (Rational(20) - Rational(1920 * r * r)) * a[0] + Rational(960) * a[1]);
    }
  }
}

TEST(Conjecture, LocalExamples) {
  const auto& p3 = fixture("local_p3");
  const auto m3 = meeting_table(p3);
  EXPECT_EQ(rhs_genus1(p3, m3, {2}, {Rational(1)}), Rational(-30));
  EXPECT_EQ(rhs_genus1(p3, m3, {3}, {Rational(1)}), Rational(-22610));
  const auto& p2 = fixture("local_p2");
  EXPECT_EQ(rhs_genus1(p2, meeting_table(p2), {3}, {Rational(1)}), Rational(3, 2));
  const auto& pp = fixture("local_p1p1");
  const auto mp = meeting_table(pp);
  for (const auto& a : kRank2Samples) {
    EXPECT_EQ(rhs_genus1(pp, mp, {2, 2}, a), Rational(-2) * (a[0] + a[1]));
  }
}

TEST(Conjecture, TermsMatchNaiveSums) {
  for (const auto& name : fixture_names()) {
    const auto& g = fixture(name);
    const auto m = meeting_table(g);
    for (const auto& beta : effective_classes(g.ample, g.genus1_degree_bound)) {
      RationalVector a(g.divisor_rank());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rational(static_cast<std::int64_t>(i) + 2, 3);
      if (pairing(g, a, beta).is_zero()) continue;
      const auto t = rhs_terms(g, m, beta, a);
      EXPECT_EQ(t.total, t.genus0 + t.meeting + t.genus1);
      EXPECT_EQ(t.total, naive_rhs(g, m, beta, a)) << name << beta;
    }
  }
}

TEST(Conjecture, PoleLocusRejected) {
  const auto& g = fixture("local_p1p1");
  EXPECT_THROW(rhs_genus1(g, meeting_table(g), {1, 1}, {Rational(1), Rational(-1)}), DomainError);
}

TEST(Conjecture, Tau2Predictions) {
  EXPECT_EQ(tau2_rhs(fixture("local_p3"), {1}), Rational(-50, 3));
  EXPECT_EQ(tau2_rhs(fixture("local_p3"), {2}), Rational(-2050, 3));
  EXPECT_EQ(tau2_rhs(fixture("elliptic_p3"), {1}), Rational(-3840));
}

TEST(Conjecture, LinearOnEveryFixture) {
  for (const auto& name : fixture_names()) {
    const auto& g = fixture(name);
    const auto m = meeting_table(g);
    for (const auto& beta : effective_classes(g.ample, g.genus1_degree_bound)) {
      const auto r = rhs_is_linear(g, m, beta, 20, 99);
      EXPECT_TRUE(r.passed) << name << beta << " " << r.counterexample.value_or("");
    }
  }
}

TEST(Conjecture, CorruptedMeetingTableIsNotLinear) {
  const auto& g = fixture("local_p1p1");
  const auto m = meeting_table(g);
  const auto bad = m.with_entry({1, 0}, {1, 2}, m.at({1, 0}, {1, 2}) + Rational(1));
  const auto r = rhs_is_linear(g, bad, {2, 2}, 20, 99);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Conjecture, Verdicts) {
  const auto& g = fixture("local_p3");
  const auto m = meeting_table(g);
  EXPECT_EQ(compare(g, m, {2}, {Rational(1)}, Rational(-30)).kind, VerdictKind::match);
  EXPECT_EQ(compare(g, m, {2}, {Rational(1)}, Rational(30)).kind, VerdictKind::mismatch);
  const auto v = compare(g, m, {3}, {Rational(1)}, std::nullopt);
  EXPECT_EQ(v.kind, VerdictKind::rhs_only);
  EXPECT_EQ(v.rhs, Rational(-22610));
  EXPECT_EQ(to_string(VerdictKind::rhs_only), "RHS-only");
}

TEST(Conjecture, ProductWithEllipticCurve) {
  const auto& g = fixture("cy3xE_template");
  const auto m = meeting_table(g);
  const Rational chi = n1(g, {1});
  EXPECT_EQ(compare(g, m, {1}, {Rational(1)}, product_cy3xE_tau1_fiber(chi, Rational(1), 1)).kind,
            VerdictKind::match);
  // For r > 1 the moduli space is empty while the k = r divisor term is not.
  const auto v = compare(g, m, {2}, {Rational(1)}, product_cy3xE_tau1_fiber(chi, Rational(1), 2));
  EXPECT_EQ(v.kind, VerdictKind::mismatch);
  EXPECT_EQ(v.rhs, -chi);
}
