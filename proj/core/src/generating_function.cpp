#include "stripcount/generating_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stripcount {

namespace {

// (1 - t)^k
DensePolynomial one_minus_t_power(int k) {
  DensePolynomial p({1});
  const DensePolynomial factor({1, -1});
  for (int i = 0; i < k; ++i) p = p * factor;
  return p;
}

// Elementary symmetric functions e_0 .. e_k of values.
std::vector<Int> elementary_symmetric(const std::vector<Int>& values) {
  std::vector<Int> e(values.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k > 0; --k) e[k] = checked_add(e[k], checked_mul(e[k - 1], values[i]));
  }
  return e;
}

}  // namespace

std::string RationalSeries::to_string() const {
  std::ostringstream out;
  const bool compound = numerator.coefficients().size() > 1 &&
                        std::count_if(numerator.coefficients().begin(), numerator.coefficients().end(),
                                      [](Int c) { return c != 0; }) > 1;
  if (compound) out << "(";
  out << numerator.to_string("t");
  if (compound) out << ")";
  out << " / (1-t)";
  if (denominator_exponent != 1) out << "^" << denominator_exponent;
  return out.str();
}

DensePolynomial eulerian(unsigned j) {
  if (j == 0) return DensePolynomial({1});
  // Eulerian numbers E(j, k), k = 0 .. j-1; A_j(t) = sum_k E(j,k) t^{k+1}.
  std::vector<Int> row{1};
  for (unsigned r = 2; r <= j; ++r) {
    std::vector<Int> next(r, 0);
    for (unsigned k = 0; k < r; ++k) {
      Int v = 0;
      if (k < row.size()) v = checked_add(v, checked_mul(static_cast<Int>(k + 1), row[k]));
      if (k >= 1 && k - 1 < row.size()) v = checked_add(v, checked_mul(static_cast<Int>(r - k), row[k - 1]));
      next[k] = v;
    }
    row = std::move(next);
  }
  std::vector<Int> coeffs(j + 1, 0);
  for (unsigned k = 0; k < j; ++k) coeffs[k + 1] = row[k];
  return DensePolynomial(std::move(coeffs));
}

RationalSeries rescale(const RationalSeries& s, int denominator_exponent) {
  if (denominator_exponent < s.denominator_exponent) {
    throw std::invalid_argument("rescale: cannot lower the denominator exponent");
  }
  return RationalSeries{s.numerator * one_minus_t_power(denominator_exponent - s.denominator_exponent),
                        denominator_exponent};
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  const int k = std::max(a.denominator_exponent, b.denominator_exponent);
  return RationalSeries{rescale(a, k).numerator + rescale(b, k).numerator, k};
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  const int k = std::max(a.denominator_exponent, b.denominator_exponent);
  return RationalSeries{rescale(a, k).numerator - rescale(b, k).numerator, k};
}

RationalSeries term_gf(const PlusTerm& term, int denominator_exponent) {
  const auto r = static_cast<int>(term.shifts.size());
  if (r + 1 > denominator_exponent) {
    throw std::invalid_argument("term_gf: term has " + std::to_string(r) +
                                " factors, too many for (1-t)^" + std::to_string(denominator_exponent));
  }
  std::vector<Int> shifts(term.shifts);
  std::sort(shifts.begin(), shifts.end());
  if (!shifts.empty() && shifts.front() < 0) {
    throw std::invalid_argument("term_gf: negative shifts are not supported");
  }
  if (shifts.empty()) {
    return rescale(RationalSeries{DensePolynomial({term.coeff}), 1}, denominator_exponent);
  }

  const Int top = shifts.back();
  std::vector<Int> gaps;
  gaps.reserve(shifts.size() - 1);
  for (std::size_t i = 0; i + 1 < shifts.size(); ++i) gaps.push_back(top - shifts[i]);
  const auto e = elementary_symmetric(gaps);

  // p (p + d_1) ... (p + d_{r-1}) = sum_{j=1}^r e_{r-j} p^j
  DensePolynomial numerator;
  for (int j = 1; j <= r; ++j) {
    const Int c = e[static_cast<std::size_t>(r - j)];
    if (c == 0) continue;
    numerator = numerator + c * (eulerian(static_cast<unsigned>(j)) *
                                 one_minus_t_power(denominator_exponent - (j + 1)));
  }
  numerator = term.coeff * (DensePolynomial::monomial(1, static_cast<std::size_t>(top)) * numerator);
  return RationalSeries{std::move(numerator), denominator_exponent};
}

RationalSeries expression_gf(const PlusExpression& expr, int q) {
  RationalSeries total{DensePolynomial{}, q + 1};
  for (const auto& t : expr.terms()) {
    total.numerator = total.numerator + term_gf(t, q + 1).numerator;
  }
  return total;
}

std::vector<Int> series(const RationalSeries& gf, std::size_t count) {
  // Coefficients of (1-t)^{-k}: C(i + k - 1, k - 1).
  const Int k = gf.denominator_exponent;
  std::vector<Int> binom(count, 0);
  if (count > 0) binom[0] = 1;
  for (std::size_t i = 1; i < count; ++i) {
    binom[i] = checked_mul(binom[i - 1], static_cast<Int>(i) + k - 1) / static_cast<Int>(i);
  }
  std::vector<Int> out(count, 0);
  const auto num = gf.numerator.coefficients();
  for (std::size_t a = 0; a < num.size() && a < count; ++a) {
    if (num[a] == 0) continue;
    for (std::size_t i = a; i < count; ++i) out[i] = checked_add(out[i], checked_mul(num[a], binom[i - a]));
  }
  return out;
}

}  // namespace stripcount
