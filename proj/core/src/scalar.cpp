#include "asymexp/scalar.hpp"

#include <cmath>

namespace asymexp {

double log_abs(const BigInt& x) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const Rational& x) { return log_abs(x.get_num()) - log_abs(x.get_den()); }

double log_abs(const Decimal& x) {
  return log_abs(x.mantissa()) + static_cast<double>(x.exponent()) * std::log(10.0);
}

}  // namespace asymexp
