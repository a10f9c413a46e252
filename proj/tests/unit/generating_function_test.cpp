#include <gtest/gtest.h>

#include "stripcount/generating_function.hpp"

namespace stripcount {
namespace {

TEST(Eulerian, SmallCases) {
  EXPECT_EQ(eulerian(0), DensePolynomial({1}));
  EXPECT_EQ(eulerian(1), DensePolynomial({0, 1}));
  EXPECT_EQ(eulerian(3), DensePolynomial({0, 1, 4, 1}));
  EXPECT_EQ(eulerian(4), DensePolynomial({0, 1, 11, 11, 1}));
}

TEST(TermGf, SingleShift) {
  for (Int s : {0, 1, 4}) {
    const auto gf = term_gf(PlusTerm{1, {s}}, 2);
    EXPECT_EQ(gf, (RationalSeries{DensePolynomial::monomial(1, static_cast<std::size_t>(s) + 1), 2}));
  }
}

TEST(TermGf, FallingProductIsTwoTSquared) {
  EXPECT_EQ(term_gf(PlusTerm{1, {0, 1}}, 3), (RationalSeries{DensePolynomial::monomial(2, 2), 3}));
}

TEST(TermGf, ConstantSequence) { EXPECT_EQ(term_gf(PlusTerm{1, {}}, 1), (RationalSeries{DensePolynomial({1}), 1})); }

TEST(TermGf, RejectsNegativeShiftAndSmallDenominator) {
  EXPECT_THROW(term_gf(PlusTerm{1, {-1}}, 2), std::invalid_argument);
  EXPECT_THROW(term_gf(PlusTerm{1, {0, 0}}, 2), std::invalid_argument);
}

TEST(ExpressionGf, QueensPair) {
  const PlusExpression q2({{1, {0, 0}}, {-1, {0}}, {-2, {1}}});
  const auto gf = expression_gf(q2, 2);
  EXPECT_EQ(gf, (RationalSeries{DensePolynomial::monomial(2, 3), 3}));
  EXPECT_EQ(gf.to_string(), "2t^3 / (1-t)^3");
}

TEST(ExpressionGf, BishopsPair) {
  const PlusExpression b2({{1, {0, 0}}, {-2, {1}}});
  const auto gf = expression_gf(b2, 2);
  EXPECT_EQ(gf, (RationalSeries{DensePolynomial({0, 1, -1, 2}), 3}));
  EXPECT_EQ(gf.to_string(), "(2t^3 - t^2 + t) / (1-t)^3");
}

TEST(ExpressionGf, ZeroExpression) {
  const auto gf = expression_gf(PlusExpression{}, 3);
  EXPECT_TRUE(gf.numerator.is_zero());
  EXPECT_EQ(gf.denominator_exponent, 4);
}

TEST(Series, Expansions) {
  EXPECT_EQ(series(RationalSeries{DensePolynomial::monomial(2, 3), 3}, 6), (std::vector<Int>{0, 0, 0, 2, 6, 12}));
  EXPECT_EQ(series(RationalSeries{DensePolynomial({1}), 1}, 4), (std::vector<Int>{1, 1, 1, 1}));
  EXPECT_EQ(series(RationalSeries{DensePolynomial::monomial(2, 2), 3}, 6), (std::vector<Int>{0, 0, 2, 6, 12, 20}));
}

TEST(Rescale, RaisesExponent) {
  const RationalSeries s{DensePolynomial({1}), 1};
  const auto r = rescale(s, 3);
  EXPECT_EQ(r.denominator_exponent, 3);
  EXPECT_EQ(series(r, 5), series(s, 5));
  EXPECT_THROW(rescale(r, 2), std::invalid_argument);
}

TEST(Arithmetic, SumOverCommonDenominator) {
  const RationalSeries a{DensePolynomial({1}), 1};
  const RationalSeries b{DensePolynomial::monomial(1, 1), 2};
  const auto sum = a + b;
  const auto sa = series(a, 6);
  const auto sb = series(b, 6);
  const auto s = series(sum, 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s[i], sa[i] + sb[i]);
  EXPECT_EQ(series(sum - b, 6), sa);
}

}  // namespace
}  // namespace stripcount
