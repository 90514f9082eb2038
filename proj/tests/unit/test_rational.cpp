#include "hyperdiff/error.hpp"
#include "hyperdiff/rational.hpp"

#include <gtest/gtest.h>

namespace hyperdiff {
namespace {

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational(" +2/3 "), Rational(2, 3));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.2.3", "--1", "1e3", "/2", "."}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Rational, FormatsInLowestTerms) {
  EXPECT_EQ(format_rational(Rational(0)), "0");
  EXPECT_EQ(format_rational(Rational(4, 6)), "2/3");
  EXPECT_EQ(format_rational(Rational(-9, 3)), "-3");
  EXPECT_EQ(format_rational(parse_rational("-0")), "0");
}

TEST(Rational, FormatRoundTrips) {
  for (int p = -12; p <= 12; ++p) {
    for (int q = 1; q <= 7; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(parse_rational(format_rational(r)), r);
    }
  }
}

TEST(Rational, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(format_decimal(Rational(1, 3), 3), "0.333");
  EXPECT_EQ(format_decimal(Rational(2, 3), 3), "0.667");
  EXPECT_EQ(format_decimal(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(format_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(format_decimal(Rational(5), 0), "5");
  EXPECT_EQ(format_decimal(Rational(1, 4), 4), "0.2500");
}

}  // namespace
}  // namespace hyperdiff
