#include "stripcount/dense_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stripcount {

DensePolynomial::DensePolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

DensePolynomial DensePolynomial::monomial(Int coeff, std::size_t degree) {
  std::vector<Int> c(degree + 1, 0);
  c[degree] = coeff;
  return DensePolynomial(std::move(c));
}

DensePolynomial DensePolynomial::linear_factor(Int root) {
  return DensePolynomial({checked_neg(root), 1});
}

void DensePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int DensePolynomial::evaluate(Int x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x), *it);
  }
  return acc;
}

DensePolynomial DensePolynomial::divide_exact(Int d) const {
  if (d == 0) throw std::domain_error("division by zero");
  std::vector<Int> c(coeffs_);
  for (auto& x : c) {
    if (x % d != 0) throw std::domain_error("polynomial coefficient not divisible by " + std::to_string(d));
    x /= d;
  }
  return DensePolynomial(std::move(c));
}

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coefficient(i), b.coefficient(i));
  return DensePolynomial(std::move(c));
}

DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a.coefficient(i), b.coefficient(i));
  return DensePolynomial(std::move(c));
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return DensePolynomial(std::move(c));
}

DensePolynomial operator*(Int k, const DensePolynomial& a) {
  std::vector<Int> c(a.coeffs_);
  for (auto& x : c) x = checked_mul(k, x);
  return DensePolynomial(std::move(c));
}

DensePolynomial DensePolynomial::operator-() const { return Int{-1} * *this; }

std::string DensePolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace stripcount
