#pragma once

#include <vector>

#include "stripcount/dense_polynomial.hpp"
#include "stripcount/plus_expression.hpp"

namespace stripcount {

/// numerator(t) / (1 - t)^denominator_exponent
struct RationalSeries {
  DensePolynomial numerator;
  int denominator_exponent = 1;

  bool operator==(const RationalSeries&) const = default;

  /// "2t^3 / (1-t)^3"
  std::string to_string() const;
};

/// Eulerian polynomial A_j(t): sum_{n>=0} n^j t^n = A_j(t) / (1-t)^(j+1).
DensePolynomial eulerian(unsigned j);

/// Same series over a larger power of (1 - t). Throws std::invalid_argument
/// when the new exponent is smaller.
RationalSeries rescale(const RationalSeries& s, int denominator_exponent);

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);

/// Generating function of n -> coeff * prod (n - s_i)^+ over
/// (1-t)^denominator_exponent. With shifts sorted and p = n - s_max the
/// term is sum_j e_{r-j}(d) p^j with d_i = s_max - s_i, all coefficients
/// nonnegative, giving t^{s_max} sum_j e_{r-j}(d) A_j(t)/(1-t)^{j+1}.
/// Throws std::invalid_argument if the term has more than
/// denominator_exponent - 1 factors or a negative shift.
RationalSeries term_gf(const PlusTerm& term, int denominator_exponent);

/// Sum of term_gf over all terms, over (1-t)^(q+1).
RationalSeries expression_gf(const PlusExpression& expr, int q);

/// First `count` power-series coefficients.
std::vector<Int> series(const RationalSeries& gf, std::size_t count);

}  // namespace stripcount
