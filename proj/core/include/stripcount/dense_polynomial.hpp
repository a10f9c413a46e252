#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stripcount/integer.hpp"

namespace stripcount {

/// Univariate polynomial with exact integer coefficients, lowest degree first.
/// The highest stored coefficient is nonzero; the zero polynomial has none.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Int> coefficients);

  static DensePolynomial monomial(Int coeff, std::size_t degree);
  /// (x - root)
  static DensePolynomial linear_factor(Int root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Int> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Int coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Int evaluate(Int x) const;

  /// Divides every coefficient by d; throws std::domain_error unless exact.
  DensePolynomial divide_exact(Int d) const;

  friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
  friend DensePolynomial operator*(Int k, const DensePolynomial& a);
  DensePolynomial operator-() const;

  bool operator==(const DensePolynomial&) const = default;

  /// Descending powers, e.g. "n^3 - 9n^2 + 30n - 36".
  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace stripcount
