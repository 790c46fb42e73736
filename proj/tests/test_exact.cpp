#include "wbary/error.hpp"
#include "wbary/exact.hpp"

#include <gtest/gtest.h>

namespace wbary {
namespace {

TEST(ParseRational, Fractions) {
  EXPECT_EQ(parse_rational("3/10"), Rational(3, 10));
  EXPECT_EQ(parse_rational("6/20"), Rational(3, 10));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("1/-2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
}

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(parse_rational("0.3"), Rational(3, 10));
  EXPECT_EQ(parse_rational("4.5"), Rational(9, 2));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2."), Rational(2));
  // 0.1 has no finite binary expansion; the exact value must survive.
  EXPECT_EQ(parse_rational("0.1") * 10, Rational(1));
}

TEST(ParseRational, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_rational("0.0125"), Rational(1, 80));
  EXPECT_EQ(parse_rational("010/08"), Rational(5, 4));
  EXPECT_EQ(parse_integer("007"), BigInt(7));
  EXPECT_EQ(parse_integer("-0"), BigInt(0));
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "1e-3", "0x10", "1.2.3", ".", "--1", "1/2/3"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(ParseInteger, Basic) {
  EXPECT_EQ(parse_integer("-12"), BigInt(-12));
  EXPECT_EQ(parse_integer("+3"), BigInt(3));
  EXPECT_EQ(parse_integer("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(parse_integer("1.5"), Error);
}

TEST(ToString, CanonicalFractions) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(parse_rational(to_string(Rational(-22, 7))), Rational(-22, 7));
}

TEST(FloorRational, Examples) {
  EXPECT_EQ(floor_rational(Rational(9, 2)), 4);
  EXPECT_EQ(floor_rational(Rational(-1, 2)), -1);
  EXPECT_EQ(floor_rational(Rational(3, 1)), 3);
  EXPECT_EQ(floor_rational(Rational(-3, 1)), -3);
  EXPECT_EQ(floor_rational(Rational(0)), 0);
  EXPECT_EQ(floor_rational(Rational(-7, 3)), -3);
}

TEST(FloorRational, BracketsValue) {
  for (int num = -60; num <= 60; ++num) {
    for (int den = 1; den <= 12; ++den) {
      const Rational q(num, den);
      const BigInt f = floor_rational(q);
      EXPECT_LE(Rational(f), q);
      EXPECT_GT(Rational(f + 1), q);
    }
  }
}

TEST(ToInt64, RangeChecked) {
  EXPECT_EQ(to_int64(BigInt(-5)), -5);
  EXPECT_THROW(to_int64(BigInt(1) << 70), Error);
}

}  // namespace
}  // namespace wbary
