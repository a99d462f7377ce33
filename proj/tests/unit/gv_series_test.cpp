#include <gtest/gtest.h>

#include <random>

#include "cy4gv/constraints.hpp"
#include "cy4gv/error.hpp"
#include "cy4gv/gv_series.hpp"
#include "support/test_support.hpp"

using namespace cy4gv;
using namespace cy4gv::testing;

namespace {

// sum_{k | beta} n_{beta/k} / k^2, looping k over all integers.
Rational naive_gw0(const GVTable& t, const CurveClass& beta) {
  Rational out;
  for (std::int64_t k = 1; k <= max_coord(beta); ++k) {
    if (divides(k, beta)) out += t.at(quotient(beta, k)) / Rational(k * k);
  }
  return out;
}

std::int64_t naive_sigma(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) s += n % d == 0 ? d : 0;
  return s;
}

Rational naive_gw1(const RandomTables& t, const CurveClass& beta) {
  Rational out;
  const auto& ample = t.gv1.ample;
  for (std::int64_t k = 1; k <= max_coord(beta); ++k) {
    if (!divides(k, beta)) continue;
    const auto b = quotient(beta, k);
    out += Rational(naive_sigma(k), k) * t.gv1.at(b);
    out -= t.n0c2.at(b) / Rational(24 * k);
    for (const auto& b1 : effective_classes(ample, b.degree(ample))) {
      const auto b2 = b - b1;
      if (b2.is_effective()) out += t.meeting.at(b1, b2) / Rational(24 * k);
    }
  }
  return out;
}

}  // namespace

TEST(GvSeries, Sigma) {
  for (std::int64_t n = 1; n <= 60; ++n) EXPECT_EQ(sigma(n), naive_sigma(n));
  EXPECT_THROW(sigma(0), DomainError);
}

TEST(GvSeries, Genus0TransformMatchesNaiveSumOnRandomTables) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_tables(rng, 8);
    const auto series = gw0_from_gv0(t.gv0, 8);
    for (const auto& beta : effective_classes(t.gv0.ample, 8)) {
      ASSERT_EQ(series.coefficient(beta), naive_gw0(t.gv0, beta)) << beta;
    }
    EXPECT_TRUE(gv0_from_gw0(series).same_values(t.gv0));
  }
}

TEST(GvSeries, Genus1TransformMatchesNaiveSumOnRandomTables) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_tables(rng, 8);
    const auto series = gw1_from_gv1(t.gv1, t.n0c2, t.meeting, 8);
    for (const auto& beta : effective_classes(t.gv1.ample, 8)) {
      ASSERT_EQ(series.coefficient(beta), naive_gw1(t, beta)) << beta;
    }
    EXPECT_TRUE(gv1_from_gw1(series, t.n0c2, t.meeting).same_values(t.gv1));
  }
}

TEST(GvSeries, FixtureRoundTrips) {
  for (const auto& name : fixture_names()) {
    const auto& g = fixture(name);
    const auto m = meeting_table(g);
    for (std::size_t a = 0; a < g.h4_rank(); ++a) {
      const auto series = gw0_from_gv0(g, a, g.degree_bound);
      H4Class unit(g.h4_rank());
      unit[a] = 1;
      EXPECT_TRUE(gv0_from_gw0(series).same_values(gv0_table(g, unit))) << name;
    }
    const auto s1 = gw1_from_gv1(g, m, g.genus1_degree_bound);
    EXPECT_TRUE(gv1_from_gw1(g, s1, m).same_values(gv1_table(g))) << name;
  }
}

TEST(GvSeries, EllipticFiberGenus1Coefficient) {
  // n1 - n0(c2)/24 at the primitive fiber class.
  const auto& g = fixture("elliptic_p3");
  const auto s = gw1_from_gv1(g, meeting_table(g), 1);
  EXPECT_EQ(s.coefficient({1}), Rational(-20 - 1920));
}

TEST(GvSeries, LocalP1P1PointInvariantFromClosedForm) {
  NovikovSeries gw({1, 1}, 8);
  for (const auto& beta : effective_classes({1, 1}, 8)) gw.add_term(beta, local_p1p1_gw_pt(beta[0], beta[1]));
  const auto gv = gv0_from_gw0(gw);
  // By hand: GW(2,2) = 36/16 and GW(1,1) = 1, so n = 9/4 - 1/4.
  EXPECT_EQ(gv.at({2, 2}), Rational(9, 4) - Rational(1, 4));
  EXPECT_EQ(gv.at({2, 2}), Rational(2));
  // The shipped point-class table is the same inversion.
  const auto& g = fixture("local_p1p1");
  for (const auto& beta : effective_classes({1, 1}, 8)) {
    EXPECT_EQ(gv.at(beta), n0(g, beta, {Rational(0), Rational(1)})) << beta;
  }
}

TEST(GvSeries, CutoffBeyondTableThrows) {
  const auto& g = fixture("local_p2");
  EXPECT_THROW(gw0_from_gv0(g, 0, 4), DomainError);
  EXPECT_THROW(gv1_table(g).at({4}), DomainError);
}
