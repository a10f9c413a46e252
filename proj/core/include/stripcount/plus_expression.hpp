#pragma once

#include <span>
#include <string>
#include <vector>

#include "stripcount/dense_polynomial.hpp"
#include "stripcount/integer.hpp"

namespace stripcount {

/// coeff * prod_{s in shifts} (n - s)^+, shifts sorted ascending.
struct PlusTerm {
  Int coeff = 0;
  std::vector<Int> shifts;

  std::size_t degree() const noexcept { return shifts.size(); }
  bool operator==(const PlusTerm&) const = default;
};

/// Signed integer combination of positive-part products, the closed form of
/// an integral chromatic function.
///
/// Always kept normalized: one term per shift multiset, no zero coefficients,
/// terms ordered by degree descending then by shifts lexicographically. The
/// zero expression has no terms. Two different normalized expressions may
/// still agree as functions of n; use equal_as_functions for that.
class PlusExpression {
 public:
  PlusExpression() = default;
  explicit PlusExpression(std::vector<PlusTerm> terms);

  /// The constant 1 (a single term with no shifts).
  static PlusExpression one();
  /// coeff * prod (n - s)^+ over the given shifts.
  static PlusExpression term(Int coeff, std::vector<Int> shifts);

  std::span<const PlusTerm> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest shift-multiset size; 0 for the zero expression.
  std::size_t degree() const noexcept;
  /// Largest shift occurring in any term, clamped below at 0.
  Int max_shift() const noexcept;

  friend PlusExpression operator+(const PlusExpression& a, const PlusExpression& b);
  friend PlusExpression operator-(const PlusExpression& a, const PlusExpression& b);
  friend PlusExpression operator*(const PlusExpression& a, const PlusExpression& b);
  PlusExpression operator-() const;

  bool operator==(const PlusExpression&) const = default;

  /// e.g. "n^2 - n - 2(n-1)^+"; "0" for the zero expression.
  std::string to_string() const;

 private:
  std::vector<PlusTerm> terms_;
};

/// Merges equal shift multisets, drops zero terms, sorts shifts and terms.
PlusExpression normalize(std::vector<PlusTerm> terms);

PlusExpression scale(const PlusExpression& a, Int k);

/// sum coeff * prod max(0, n - s). Throws std::invalid_argument for n < 0.
Int evaluate(const PlusExpression& expr, Int n);

/// The polynomial obtained by dropping every positive part; equals the
/// expression for all n >= max_shift().
DensePolynomial eventual_polynomial(const PlusExpression& expr);

/// Least N >= 0 such that the expression equals its eventual polynomial at
/// every integer n >= N.
Int polynomial_threshold(const PlusExpression& expr);

/// Function equality: agreement on 0 .. max(max shift) + max(degree) + 1,
/// which determines both piecewise polynomials completely.
bool equal_as_functions(const PlusExpression& a, const PlusExpression& b);

}  // namespace stripcount
