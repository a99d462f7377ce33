#include <gtest/gtest.h>

#include "cy4gv/constraints.hpp"
#include "cy4gv/error.hpp"
#include "support/test_support.hpp"

using namespace cy4gv;
using namespace cy4gv::testing;

TEST(Constraints, ThreeFormsHoldOnLocalP1P1) {
  const auto& g = fixture("local_p1p1");
  const auto m = meeting_table(g);
  for (const auto& beta : effective_classes(g.ample, 6)) {
    const auto alphas = orthogonal_alphas(g, beta);
    ASSERT_FALSE(alphas.empty());
    for (const auto& a : alphas) {
      const auto gv = constraint_gv_form(g, m, a, beta);
      const auto rs = constraint_resummed(g, a, beta);
      const auto gw = constraint_gw_form(g, a, beta);
      EXPECT_TRUE(gv.holds()) << beta;
      EXPECT_TRUE(rs.holds()) << beta;
      EXPECT_TRUE(gw.holds()) << beta;
      EXPECT_EQ(gv.lhs, rs.lhs);
      EXPECT_EQ(gv.rhs, rs.rhs);
    }
  }
}

TEST(Constraints, HoldOnEveryFixtureWithinBounds) {
  for (const auto& name : fixture_names()) {
    const auto& g = fixture(name);
    const auto m = meeting_table(g);
    for (const auto& beta : effective_classes(g.ample, g.degree_bound)) {
      for (const auto& a : orthogonal_alphas(g, beta)) {
        EXPECT_TRUE(constraint_gv_form(g, m, a, beta).holds()) << name << beta;
        EXPECT_TRUE(constraint_gw_form(g, a, beta).holds()) << name << beta;
      }
    }
  }
}

TEST(Constraints, OrthogonalAlphasSpanTheKernel) {
  const auto& g = fixture("local_p1p1");
  const auto a = orthogonal_alphas(g, {2, 3});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(pairing(g, a[0], {2, 3}), Rational(0));
  EXPECT_FALSE(a[0][0].is_zero());
  const auto edge = orthogonal_alphas(g, {0, 3});
  ASSERT_EQ(edge.size(), 1u);
  EXPECT_EQ(edge[0], (RationalVector{Rational(1), Rational(0)}));
  EXPECT_TRUE(orthogonal_alphas(fixture("local_p2"), {2}).empty());
}

TEST(Constraints, OffKernelAlphaRejected) {
  const auto& g = fixture("local_p1p1");
  const auto m = meeting_table(g);
  EXPECT_THROW(constraint_gv_form(g, m, {Rational(1), Rational(1)}, {1, 1}), DomainError);
  EXPECT_THROW(constraint_resummed(g, {Rational(1), Rational(0)}, {1, 1}), DomainError);
  EXPECT_THROW(constraint_gw_form(g, {Rational(0), Rational(1)}, {1, 1}), DomainError);
}

TEST(Constraints, ClosedFormEdges) {
  EXPECT_EQ(local_p1p1_gw_pt(2, 2), Rational(36, 16));
  EXPECT_EQ(local_p1p1_gw_pt(3, 0), Rational(1, 9));
  EXPECT_EQ(local_p1p1_gw_pt(0, 1), Rational(1));
}

TEST(Constraints, BinomialRecursion) {
  for (std::int64_t d1 = 1; d1 <= 10; ++d1) {
    for (std::int64_t d2 = 1; d2 <= 10; ++d2) EXPECT_TRUE(binomial_recursion_check(d1, d2).holds()) << d1 << "," << d2;
  }
  EXPECT_THROW(binomial_recursion_check(0, 3), DomainError);
}

TEST(Constraints, BinomialDisplayReadings) {
  for (std::int64_t d1 = 1; d1 <= 10; ++d1) {
    for (std::int64_t d2 = 1; d2 <= 10; ++d2) {
      EXPECT_TRUE(printed_binomial_display(d1, d2, BinomialReading::nonzero_pairs).holds()) << d1 << "," << d2;
    }
  }
  // Strictly positive parts with unsquared binomials: no splitting of (2,1)
  // survives, so the right side is empty.
  const auto s = printed_binomial_display(2, 1, BinomialReading::strict);
  EXPECT_EQ(s.lhs, Rational(4));
  EXPECT_EQ(s.rhs, Rational(0));
  EXPECT_FALSE(s.holds());
}
