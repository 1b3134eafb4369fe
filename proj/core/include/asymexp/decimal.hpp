#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "asymexp/exact.hpp"

namespace asymexp {

/// Radix-10 floating point number with a per-value precision.
///
/// A value is `mantissa * 10^exponent`. `digits()` is the number of significant
/// decimal digits results are rounded to (round-half-even). A precision of 0
/// marks an exact value: it is never rounded on its own, and in a binary
/// operation it adopts the precision of the other operand. Results of a binary
/// operation carry the larger precision of the two operands; operands holding
/// more digits than that are rounded first.
///
/// Division needs a nonzero precision on at least one side.
class Decimal {
 public:
  Decimal() = default;  // exact zero
  Decimal(long value, int digits);

  static Decimal exact(long value) { return Decimal(value, 0); }
  static Decimal from_scaled(BigInt mantissa, long exponent, int digits);
  static Decimal from_rational(const Rational& value, int digits);
  /// Parses "[-]d[.d][e[-]d]". digits == 0 keeps every digit of the text.
  static Decimal parse(std::string_view text, int digits);

  int digits() const noexcept { return digits_; }
  const BigInt& mantissa() const noexcept { return mantissa_; }
  long exponent() const noexcept { return exponent_; }

  int sign() const noexcept { return sgn(mantissa_); }
  bool is_zero() const noexcept { return sign() == 0; }
  /// floor(log10(|x|)); undefined for zero (returns 0).
  long adjusted_exponent() const;

  /// Same value re-rounded to `digits` significant digits (0: mark exact, no rounding).
  Decimal with_digits(int digits) const;

  Rational to_rational() const;
  double to_double() const;

  /// Every stored significant digit, trailing zeros stripped. Plain notation
  /// for moderate magnitudes, otherwise d.dddE+x.
  std::string to_string() const;
  /// Rounded half-even to `significant` digits first.
  std::string to_string(int significant) const;

  Decimal abs() const;
  Decimal operator-() const;

  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  friend Decimal operator*(const Decimal& a, const Decimal& b);
  friend Decimal operator/(const Decimal& a, const Decimal& b);
  /// Exact product with an integer, rounded once at the decimal's precision.
  friend Decimal operator*(const Decimal& a, const BigInt& b);
  friend Decimal operator*(const BigInt& a, const Decimal& b) { return b * a; }

  Decimal& operator+=(const Decimal& o) { return *this = *this + o; }
  Decimal& operator-=(const Decimal& o) { return *this = *this - o; }
  Decimal& operator*=(const Decimal& o) { return *this = *this * o; }
  Decimal& operator/=(const Decimal& o) { return *this = *this / o; }

  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);
  friend bool operator==(const Decimal& a, const Decimal& b) { return (a <=> b) == 0; }

  /// Identical representation (mantissa, exponent and precision), not just value.
  bool identical(const Decimal& o) const {
    return digits_ == o.digits_ && exponent_ == o.exponent_ && mantissa_ == o.mantissa_;
  }

 private:
  void round_in_place(int digits);

  BigInt mantissa_ = 0;
  long exponent_ = 0;
  int digits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Decimal& value);

/// 10^n for n >= 0.
const BigInt& power_of_ten(long n);

/// Number of decimal digits of |value| (1 for zero).
long decimal_digit_count(const BigInt& value);

/// pi correctly rounded to `digits` significant digits.
Decimal decimal_pi(int digits);

}  // namespace asymexp
