#pragma once

#include <cstdint>
#include <stdexcept>

namespace stripcount {

/// Exact integer used for gains, weights, shifts and coefficients.
/// All arithmetic on it goes through the checked helpers below; wraparound
/// is never silent.
using Int = std::int64_t;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int positive_part(Int x) { return x > 0 ? x : 0; }

inline Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

inline Int factorial(Int n) {
  Int r = 1;
  for (Int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace stripcount
