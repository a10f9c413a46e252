#include "stripcount/plus_expression.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stripcount {

namespace {

// Degree descending, then shifts lexicographically.
struct TermOrder {
  bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

std::string factor_string(Int shift) {
  if (shift == 0) return "n";
  std::ostringstream out;
  out << "(n" << (shift < 0 ? "+" : "-") << (shift < 0 ? -shift : shift) << ")^+";
  return out.str();
}

}  // namespace

PlusExpression normalize(std::vector<PlusTerm> terms) {
  std::map<std::vector<Int>, Int, TermOrder> merged;
  for (auto& t : terms) {
    std::sort(t.shifts.begin(), t.shifts.end());
    auto [it, inserted] = merged.try_emplace(std::move(t.shifts), t.coeff);
    if (!inserted) it->second = checked_add(it->second, t.coeff);
  }
  std::vector<PlusTerm> result;
  result.reserve(merged.size());
  for (auto& [shifts, coeff] : merged) {
    if (coeff != 0) result.push_back(PlusTerm{coeff, shifts});
  }
  return PlusExpression(std::move(result));
}

PlusExpression::PlusExpression(std::vector<PlusTerm> terms) {
  const bool normal =
      std::all_of(terms.begin(), terms.end(),
                  [](const PlusTerm& t) {
                    return t.coeff != 0 && std::is_sorted(t.shifts.begin(), t.shifts.end());
                  }) &&
      std::adjacent_find(terms.begin(), terms.end(), [](const PlusTerm& a, const PlusTerm& b) {
        return !TermOrder{}(a.shifts, b.shifts);
      }) == terms.end();
  if (normal) {
    terms_ = std::move(terms);
  } else {
    terms_ = normalize(std::move(terms)).terms_;
  }
}

PlusExpression PlusExpression::one() { return term(1, {}); }

PlusExpression PlusExpression::term(Int coeff, std::vector<Int> shifts) {
  return PlusExpression({PlusTerm{coeff, std::move(shifts)}});
}

std::size_t PlusExpression::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

Int PlusExpression::max_shift() const noexcept {
  Int m = 0;
  for (const auto& t : terms_) {
    if (!t.shifts.empty()) m = std::max(m, t.shifts.back());
  }
  return m;
}

PlusExpression operator+(const PlusExpression& a, const PlusExpression& b) {
  std::vector<PlusTerm> all(a.terms_.begin(), a.terms_.end());
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return normalize(std::move(all));
}

PlusExpression PlusExpression::operator-() const { return scale(*this, -1); }

PlusExpression operator-(const PlusExpression& a, const PlusExpression& b) { return a + (-b); }

PlusExpression operator*(const PlusExpression& a, const PlusExpression& b) {
  std::vector<PlusTerm> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      PlusTerm t;
      t.coeff = checked_mul(x.coeff, y.coeff);
      t.shifts.reserve(x.shifts.size() + y.shifts.size());
      std::merge(x.shifts.begin(), x.shifts.end(), y.shifts.begin(), y.shifts.end(),
                 std::back_inserter(t.shifts));
      products.push_back(std::move(t));
    }
  }
  return normalize(std::move(products));
}

PlusExpression scale(const PlusExpression& a, Int k) {
  std::vector<PlusTerm> terms(a.terms().begin(), a.terms().end());
  for (auto& t : terms) t.coeff = checked_mul(t.coeff, k);
  return normalize(std::move(terms));
}

Int evaluate(const PlusExpression& expr, Int n) {
  if (n < 0) throw std::invalid_argument("evaluate: n must be nonnegative");
  Int total = 0;
  for (const auto& t : expr.terms()) {
    Int prod = t.coeff;
    for (Int s : t.shifts) {
      prod = checked_mul(prod, positive_part(checked_sub(n, s)));
      if (prod == 0) break;
    }
    total = checked_add(total, prod);
  }
  return total;
}

DensePolynomial eventual_polynomial(const PlusExpression& expr) {
  DensePolynomial total;
  for (const auto& t : expr.terms()) {
    DensePolynomial p({t.coeff});
    for (Int s : t.shifts) p = p * DensePolynomial::linear_factor(s);
    total = total + p;
  }
  return total;
}

Int polynomial_threshold(const PlusExpression& expr) {
  const DensePolynomial poly = eventual_polynomial(expr);
  Int threshold = expr.max_shift();
  while (threshold > 0 && evaluate(expr, threshold - 1) == poly.evaluate(threshold - 1)) {
    --threshold;
  }
  return threshold;
}

bool equal_as_functions(const PlusExpression& a, const PlusExpression& b) {
  const Int last = std::max(a.max_shift(), b.max_shift()) +
                   static_cast<Int>(std::max(a.degree(), b.degree())) + 1;
  for (Int n = 0; n <= last; ++n) {
    if (evaluate(a, n) != evaluate(b, n)) return false;
  }
  return true;
}

std::string PlusExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const Int mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff < 0) out << "-";
    } else {
      out << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || t.shifts.empty()) out << mag;
    // Runs of equal shifts print as powers.
    for (std::size_t i = 0; i < t.shifts.size();) {
      std::size_t j = i;
      while (j < t.shifts.size() && t.shifts[j] == t.shifts[i]) ++j;
      const std::size_t run = j - i;
      const std::string f = factor_string(t.shifts[i]);
      if (run == 1) {
        out << f;
      } else if (t.shifts[i] == 0) {
        out << "n^" << run;
      } else {
        out << "[" << f << "]^" << run;
      }
      i = j;
    }
  }
  return out.str();
}

}  // namespace stripcount
