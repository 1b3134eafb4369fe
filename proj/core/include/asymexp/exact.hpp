#pragma once

// Exact integer and rational arithmetic, backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace asymexp {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts "p", "-p", "p/q". Throws Error(kParseError) on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// (-1)^n as +1/-1.
constexpr int sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace asymexp
