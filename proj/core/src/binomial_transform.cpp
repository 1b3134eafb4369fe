#include "asymexp/binomial_transform.hpp"

#include <algorithm>

#include "asymexp/combinatorics.hpp"

namespace asymexp::detail {

namespace {

// Rationals go through a common denominator so the O(n^2) accumulation is
// integer-only.
std::vector<Rational> transform_rational(std::span<const Rational> in, bool alternating) {
  const long size = static_cast<long>(in.size());
  std::vector<Rational> out(in.size());
  if (size == 0) return out;
  out[0] = in[0];
  if (size == 1) return out;
  BigInt denom = 1;
  for (long s = 1; s < size; ++s) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), in[s].get_den().get_mpz_t());
  std::vector<BigInt> scaled(in.size());
  for (long s = 1; s < size; ++s) scaled[s] = in[s].get_num() * (denom / in[s].get_den());
  const BinomialTable binomials(size - 2);
  for (long n = 1; n < size; ++n) {
    BigInt acc = 0;
    for (long s = 1; s <= n; ++s) {
      if (scaled[s] == 0) continue;
      const BigInt term = binomials(n - 1, s - 1) * scaled[s];
      if (alternating && (n - s) % 2 != 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    out[n] = Rational(acc, denom);
    out[n].canonicalize();
  }
  return out;
}

std::vector<Decimal> transform_decimal(std::span<const Decimal> in, bool alternating) {
  const long size = static_cast<long>(in.size());
  std::vector<Decimal> out(in.size());
  if (size == 0) return out;
  out[0] = in[0];
  if (size == 1) return out;
  int digits = 0;
  for (const auto& x : in) digits = std::max(digits, x.digits());
  const BinomialTable binomials(size - 2);
  for (long n = 1; n < size; ++n) {
    Decimal acc(0, digits);
    for (long s = 1; s <= n; ++s) {
      if (in[s].is_zero()) continue;
      Decimal term = in[s] * binomials(n - 1, s - 1);
      if (alternating && (n - s) % 2 != 0) term = -term;
      acc += term;
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace

template <Scalar T>
std::vector<T> binomial_transform(std::span<const T> in, bool alternating) {
  if constexpr (std::same_as<T, Rational>) {
    return transform_rational(in, alternating);
  } else {
    return transform_decimal(in, alternating);
  }
}

template std::vector<Rational> binomial_transform<Rational>(std::span<const Rational>, bool);
template std::vector<Decimal> binomial_transform<Decimal>(std::span<const Decimal>, bool);

}  // namespace asymexp::detail
