#include <gtest/gtest.h>

#include "cy4gv/error.hpp"
#include "cy4gv/meeting.hpp"
#include "support/test_support.hpp"

using namespace cy4gv;
using namespace cy4gv::testing;

TEST(Meeting, EllipticFiberValues) {
  const auto m = meeting_table(fixture("elliptic_p3"));
  for (std::int64_t r1 = 1; r1 <= 5; ++r1) {
    for (std::int64_t r2 = 1; r2 <= 5; ++r2) EXPECT_EQ(m.at({r1}, {r2}), Rational(46080)) << r1 << "," << r2;
  }
}

TEST(Meeting, LocalP3Values) {
  const auto m = meeting_table(fixture("local_p3"));
  EXPECT_EQ(m.at({1}, {1}), Rational(-1400));
  EXPECT_EQ(m.at({1}, {2}), Rational(-67000));
}

TEST(Meeting, LocalP1P1Values) {
  const auto m = meeting_table(fixture("local_p1p1"));
  EXPECT_EQ(m.at({1, 1}, {1, 1}), Rational(-4));
  EXPECT_EQ(m.at({0, 1}, {2, 1}), Rational(2));
  EXPECT_EQ(m.at({0, 2}, {2, 0}), Rational(0));
  EXPECT_EQ(m.at({1, 0}, {1, 2}), Rational(2));
}

TEST(Meeting, LocalP2Values) {
  const auto m = meeting_table(fixture("local_p2"));
  EXPECT_EQ(m.at({1}, {1}), Rational(6));
  EXPECT_EQ(m.at({1}, {2}), Rational(4));
}

TEST(Meeting, ProductWithEllipticCurveVanishes) {
  const auto m = meeting_table(fixture("cy3xE_template"));
  for (const auto& [key, v] : m.entries()) EXPECT_TRUE(v.is_zero());
}

TEST(Meeting, SymmetricIntegralAndComplete) {
  for (const auto& name : fixture_names()) {
    const auto& g = fixture(name);
    const auto m = meeting_table(g);
    for (const auto& b1 : effective_classes(g.ample, g.degree_bound)) {
      for (const auto& b2 : effective_classes(g.ample, g.degree_bound - b1.degree(g.ample))) {
        ASSERT_TRUE(m.covers(b1, b2));
        EXPECT_EQ(m.at(b1, b2), m.at(b2, b1));
        EXPECT_TRUE(m.at(b1, b2).is_integer()) << name << " " << b1 << " " << b2;
      }
    }
  }
}

TEST(Meeting, BoundsAndNonEffectiveArguments) {
  const auto& g = fixture("local_p2");
  const auto m = meeting_table(g);
  EXPECT_EQ(m.at({0}, {1}), Rational(0));
  EXPECT_THROW(m.at({2}, {2}), DomainError);
  EXPECT_THROW(meeting_table(g, 4), DomainError);
  const auto small = meeting_table(g, 2);
  EXPECT_EQ(small.at({1}, {1}), Rational(6));
  EXPECT_THROW(small.at({1}, {2}), DomainError);
}

TEST(Meeting, WithEntryKeepsSymmetry) {
  const auto m = meeting_table(fixture("local_p1p1")).with_entry({1, 0}, {1, 2}, Rational(9));
  EXPECT_EQ(m.at({1, 2}, {1, 0}), Rational(9));
}
