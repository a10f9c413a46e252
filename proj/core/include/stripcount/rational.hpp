#pragma once

#include <compare>
#include <string>

#include "stripcount/integer.hpp"

namespace stripcount {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "7" or "7/2"
  std::string to_string() const;
  /// Accepts "p" or "p/q".
  static Rational parse(const std::string& text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace stripcount
