#pragma once

// The two coefficient kinds every algorithm is written against: exact
// rationals and working-precision decimals.

#include <concepts>
#include <string>

#include "asymexp/decimal.hpp"
#include "asymexp/exact.hpp"

namespace asymexp {

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Decimal>;

inline Rational times(const Rational& x, const BigInt& n) { return Rational(x * n); }
inline Decimal times(const Decimal& x, const BigInt& n) { return x * n; }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Decimal& x) { return x.is_zero(); }

inline Decimal to_decimal(const Rational& x, int digits) { return Decimal::from_rational(x, digits); }
inline Decimal to_decimal(const Decimal& x, int digits) { return x.with_digits(digits); }

/// Exact text: "p/q" for rationals, all stored digits for decimals.
inline std::string render(const Rational& x) { return to_string(x); }
inline std::string render(const Decimal& x) { return x.to_string(); }

/// Natural log of |x|, finite for any nonzero magnitude (no double overflow).
double log_abs(const BigInt& x);
double log_abs(const Rational& x);
double log_abs(const Decimal& x);

}  // namespace asymexp
