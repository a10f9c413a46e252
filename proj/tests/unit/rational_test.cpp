#include <gtest/gtest.h>

#include "stripcount/rational.hpp"

namespace stripcount {
namespace {

TEST(Rational, LowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OrderAndProduct) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("5/10"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

}  // namespace
}  // namespace stripcount
