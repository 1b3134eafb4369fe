#include "asymexp/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <vector>

#include "asymexp/error.hpp"

namespace asymexp {

namespace {

constexpr long kCachedPowers = 8192;

const std::vector<BigInt>& power_table() {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(kCachedPowers);
    t[0] = 1;
    for (long i = 1; i < kCachedPowers; ++i) t[i] = t[i - 1] * 10;
    return t;
  }();
  return table;
}

// Shifts mantissa left by `places` decimal digits.
BigInt scale_up(const BigInt& value, long places) {
  if (places == 0) return value;
  BigInt out = value * power_of_ten(places);
  return out;
}

}  // namespace

const BigInt& power_of_ten(long n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative power of ten");
  if (n < kCachedPowers) return power_table()[static_cast<std::size_t>(n)];
  thread_local BigInt scratch;
  mpz_ui_pow_ui(scratch.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return scratch;
}

long decimal_digit_count(const BigInt& value) {
  if (value == 0) return 1;
  long d = static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 10));
  // sizeinbase may overshoot by one
  if (d > 1 && mpz_cmpabs(value.get_mpz_t(), power_of_ten(d - 1).get_mpz_t()) < 0) --d;
  return d;
}

Decimal::Decimal(long value, int digits) : mantissa_(value), exponent_(0), digits_(digits) {
  if (digits < 0) throw Error(ErrorKind::kInvalidArgument, "negative precision");
  round_in_place(digits_);
}

Decimal Decimal::from_scaled(BigInt mantissa, long exponent, int digits) {
  if (digits < 0) throw Error(ErrorKind::kInvalidArgument, "negative precision");
  Decimal out;
  out.mantissa_ = std::move(mantissa);
  out.exponent_ = exponent;
  out.digits_ = digits;
  out.round_in_place(digits);
  return out;
}

void Decimal::round_in_place(int digits) {
  if (digits <= 0 || mantissa_ == 0) {
    if (mantissa_ == 0) exponent_ = 0;
    return;
  }
  const long have = decimal_digit_count(mantissa_);
  if (have <= digits) return;
  const long drop = have - digits;
  const int s = sgn(mantissa_);
  BigInt magnitude = ::abs(mantissa_);
  BigInt q, r;
  const BigInt& divisor = power_of_ten(drop);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), magnitude.get_mpz_t(), divisor.get_mpz_t());
  r *= 2;
  const int c = cmp(r, divisor);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  long exp = exponent_ + drop;
  if (q == power_of_ten(digits)) {
    q = power_of_ten(digits - 1);
    exp += 1;
  }
  mantissa_ = s < 0 ? BigInt(-q) : q;
  exponent_ = exp;
}

Decimal Decimal::with_digits(int digits) const {
  if (digits < 0) throw Error(ErrorKind::kInvalidArgument, "negative precision");
  Decimal out = *this;
  out.digits_ = digits;
  out.round_in_place(digits);
  return out;
}

long Decimal::adjusted_exponent() const {
  if (mantissa_ == 0) return 0;
  return exponent_ + decimal_digit_count(mantissa_) - 1;
}

Rational Decimal::to_rational() const {
  if (exponent_ >= 0) return Rational(mantissa_ * power_of_ten(exponent_));
  Rational out(mantissa_, power_of_ten(-exponent_));
  out.canonicalize();
  return out;
}

double Decimal::to_double() const {
  if (mantissa_ == 0) return 0.0;
  const std::string text = mantissa_.get_str() + "e" + std::to_string(exponent_);
  return std::strtod(text.c_str(), nullptr);
}

Decimal Decimal::abs() const {
  Decimal out = *this;
  out.mantissa_ = ::abs(mantissa_);
  return out;
}

Decimal Decimal::operator-() const {
  Decimal out = *this;
  out.mantissa_ = -mantissa_;
  return out;
}

namespace {

int common_digits(const Decimal& a, const Decimal& b) { return std::max(a.digits(), b.digits()); }

Decimal at_precision(const Decimal& x, int digits) {
  if (digits == 0 || x.digits() == digits) return x;
  return x.with_digits(digits);
}

}  // namespace

Decimal operator+(const Decimal& a_in, const Decimal& b_in) {
  const int digits = common_digits(a_in, b_in);
  if (a_in.is_zero()) return at_precision(b_in, digits);
  if (b_in.is_zero()) return at_precision(a_in, digits);
  const Decimal a = at_precision(a_in, digits);
  const Decimal b = at_precision(b_in, digits);
  if (digits > 0) {
    // A term below a hundredth of the other's last unit cannot move the rounded sum.
    const long gap = a.adjusted_exponent() - b.adjusted_exponent();
    if (gap >= digits + 2) return a;
    if (-gap >= digits + 2) return b;
  }
  const long e = std::min(a.exponent(), b.exponent());
  BigInt sum = scale_up(a.mantissa(), a.exponent() - e) + scale_up(b.mantissa(), b.exponent() - e);
  return Decimal::from_scaled(std::move(sum), e, digits);
}

Decimal operator-(const Decimal& a, const Decimal& b) { return a + (-b); }

Decimal operator*(const Decimal& a_in, const Decimal& b_in) {
  const int digits = common_digits(a_in, b_in);
  const Decimal a = at_precision(a_in, digits);
  const Decimal b = at_precision(b_in, digits);
  return Decimal::from_scaled(a.mantissa() * b.mantissa(), a.exponent() + b.exponent(), digits);
}

Decimal operator*(const Decimal& a, const BigInt& b) {
  return Decimal::from_scaled(a.mantissa() * b, a.exponent(), a.digits());
}

namespace {

// Correctly rounded quotient of two exact values.
Decimal divide_rounded(const BigInt& num, long num_exp, const BigInt& den, long den_exp, int digits) {
  long shift = digits + 2 + decimal_digit_count(den) - decimal_digit_count(num);
  shift = std::max(shift, 0L);
  BigInt numerator = scale_up(::abs(num), shift);
  BigInt denominator = ::abs(den);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  // sticky digit keeps half-even rounding exact
  q = q * 10 + (r != 0 ? 1 : 0);
  if (sgn(num) * sgn(den) < 0) q = -q;
  return Decimal::from_scaled(std::move(q), num_exp - den_exp - shift - 1, digits);
}

}  // namespace

Decimal operator/(const Decimal& a_in, const Decimal& b_in) {
  const int digits = common_digits(a_in, b_in);
  if (digits == 0) throw Error(ErrorKind::kInvalidArgument, "division of two exact decimals");
  if (b_in.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero");
  if (a_in.is_zero()) return Decimal(0, digits);
  const Decimal a = at_precision(a_in, digits);
  const Decimal b = at_precision(b_in, digits);
  return divide_rounded(a.mantissa(), a.exponent(), b.mantissa(), b.exponent(), digits);
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.is_zero()) return std::strong_ordering::equal;
  const long e = std::min(a.exponent(), b.exponent());
  const int c = cmp(scale_up(a.mantissa(), a.exponent() - e), scale_up(b.mantissa(), b.exponent() - e));
  return c <=> 0;
}

Decimal Decimal::from_rational(const Rational& value, int digits) {
  if (digits <= 0) throw Error(ErrorKind::kInvalidArgument, "rational conversion needs a precision");
  if (value == 0) return Decimal(0, digits);
  return divide_rounded(value.get_num(), 0, value.get_den(), 0, digits);
}

Decimal Decimal::parse(std::string_view text, int digits) {
  if (digits < 0) throw Error(ErrorKind::kInvalidArgument, "negative precision");
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digit_text;
  long exponent = 0;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_text.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw Error(ErrorKind::kParseError, "not a decimal literal: '" + original + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') {
      throw Error(ErrorKind::kParseError, "not a decimal literal: '" + original + "'");
    }
    std::string_view exp_text = text.substr(i + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 9 ||
        !std::all_of(exp_text.begin(), exp_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorKind::kParseError, "bad exponent in '" + original + "'");
    }
    const long e = std::stol(std::string(exp_text));
    exponent += exp_negative ? -e : e;
  }
  BigInt mantissa(digit_text, 10);
  if (negative) mantissa = -mantissa;
  return from_scaled(std::move(mantissa), exponent, digits);
}

std::string Decimal::to_string() const {
  if (mantissa_ == 0) return "0";
  BigInt m = ::abs(mantissa_);
  long e = exponent_;
  while (m % 10 == 0) {
    m /= 10;
    ++e;
  }
  std::string body = m.get_str();
  const long n = static_cast<long>(body.size());
  const long adjusted = e + n - 1;
  std::string out = mantissa_ < 0 ? "-" : "";
  if (adjusted >= -7 && adjusted < 21) {
    if (e >= 0) {
      out += body + std::string(static_cast<std::size_t>(e), '0');
    } else if (adjusted >= 0) {
      out += body.substr(0, static_cast<std::size_t>(adjusted + 1)) + "." +
             body.substr(static_cast<std::size_t>(adjusted + 1));
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-adjusted - 1), '0') + body;
    }
    return out;
  }
  out += body.substr(0, 1);
  if (n > 1) out += "." + body.substr(1);
  out += "E";
  out += adjusted < 0 ? "-" : "+";
  out += std::to_string(adjusted < 0 ? -adjusted : adjusted);
  return out;
}

std::string Decimal::to_string(int significant) const {
  if (significant <= 0) return to_string();
  return with_digits(significant).to_string();
}

std::ostream& operator<<(std::ostream& os, const Decimal& value) { return os << value.to_string(); }

namespace {

// arctan(1/x) scaled by `scale`, truncated term by term.
BigInt arctan_inverse_scaled(unsigned long x, const BigInt& scale) {
  BigInt sum = 0;
  BigInt power = scale / x;  // scale / x^(2k+1)
  const unsigned long x2 = x * x;
  for (unsigned long k = 0; power != 0; ++k) {
    BigInt term = power / (2 * k + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
  }
  return sum;
}

}  // namespace

Decimal decimal_pi(int digits) {
  if (digits <= 0) throw Error(ErrorKind::kInvalidArgument, "pi needs a precision");
  const long guard = digits + 20;
  const BigInt& scale = power_of_ten(guard);
  BigInt pi = 16 * arctan_inverse_scaled(5, scale) - 4 * arctan_inverse_scaled(239, scale);
  return Decimal::from_scaled(std::move(pi), -guard, digits);
}

}  // namespace asymexp
