#include "asymexp/conversion.hpp"

#include <algorithm>
#include <string>

#include "asymexp/binomial_transform.hpp"
#include "asymexp/combinatorics.hpp"
#include "asymexp/error.hpp"

namespace asymexp {

template <Scalar T>
PlainExpansion<T> qprime_to_q(const ShiftedExpansion<T>& shifted) {
  if (shifted.coeffs.empty()) throw Error(ErrorKind::kInvalidArgument, "empty shifted expansion");
  // (-1)^(n+k) == (-1)^(n-k): the alternating binomial transform
  return {shifted.center, detail::binomial_transform<T>(shifted.coeffs, true)};
}

template <Scalar T>
ShiftedExpansion<T> q_to_qprime(const PlainExpansion<T>& plain) {
  if (plain.coeffs.empty()) throw Error(ErrorKind::kInvalidArgument, "empty plain expansion");
  return {plain.center, detail::binomial_transform<T>(plain.coeffs, false)};
}

namespace {

template <Scalar T>
void require_prefix(const TaylorSeries<T>& taylor, long m) {
  if (m < 0) throw Error(ErrorKind::kInvalidArgument, "partial index m must be >= 0");
  if (static_cast<long>(taylor.size()) < m + 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "partial sum m = " + std::to_string(m) + " needs " + std::to_string(m + 1) + " coefficients, have " +
                    std::to_string(taylor.size()));
  }
}

template <Scalar T>
T zero_like(const TaylorSeries<T>& taylor) {
  if constexpr (std::same_as<T, Decimal>) {
    int digits = 0;
    for (const auto& c : taylor.coeffs) digits = std::max(digits, c.digits());
    return Decimal(0, digits);
  } else {
    return T{};
  }
}

Rational exact_tolerance(double rel_tol) {
  Rational t;
  mpq_set_d(t.get_mpq_t(), rel_tol);
  return t;
}

bool spread_within(const Rational& a, const Rational& b, const Rational& c, double rel_tol) {
  const Rational lo = std::min({a, b, c});
  const Rational hi = std::max({a, b, c});
  const Rational scale = std::max(Rational(abs(c)), Rational(1));
  return Rational(hi - lo) <= Rational(exact_tolerance(rel_tol) * scale);
}

bool spread_within(const Decimal& a, const Decimal& b, const Decimal& c, double rel_tol) {
  const Decimal lo = std::min({a, b, c});
  const Decimal hi = std::max({a, b, c});
  const Decimal scale = std::max(c.abs(), Decimal::exact(1));
  const Decimal tolerance = Decimal::from_rational(exact_tolerance(rel_tol), 30);
  return hi - lo <= tolerance * scale;
}

}  // namespace

template <Scalar T>
T direct_qprime0(const TaylorSeries<T>& taylor, long m) {
  require_prefix(taylor, m);
  T sum = zero_like(taylor);
  for (long s = 0; s <= m; ++s) {
    const T& c = taylor.coeffs[static_cast<std::size_t>(s)];
    if (is_zero(c)) continue;
    sum += times(c, binom(m, s));
  }
  return sum;
}

template <Scalar T>
T direct_qprime_k(const TaylorSeries<T>& taylor, long k, long m) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "direct_qprime_k needs k >= 1");
  require_prefix(taylor, m);
  T sum = zero_like(taylor);
  for (long s = 1; s <= m; ++s) {
    const T& c = taylor.coeffs[static_cast<std::size_t>(s)];
    if (is_zero(c)) continue;
    BigInt weight = 0;
    for (long n = 0; n <= k; ++n) {
      const BigInt term = binom(m - n, k - n) * binom(m, s + n);
      if (n % 2 == 0) {
        weight += term;
      } else {
        weight -= term;
      }
    }
    if (weight != 0) sum += times(c, weight);
  }
  if (k % 2 != 0) sum = -sum;
  return sum;
}

template <Scalar T>
DirectSumTrace<T> direct_trace(const TaylorSeries<T>& taylor, long k, std::span<const long> m_values,
                               double rel_tol) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "k must be >= 0");
  for (std::size_t i = 1; i < m_values.size(); ++i) {
    if (m_values[i] <= m_values[i - 1]) throw Error(ErrorKind::kInvalidArgument, "m schedule must increase strictly");
  }
  DirectSumTrace<T> trace;
  trace.k = k;
  for (long m : m_values) {
    T value = k == 0 ? direct_qprime0(taylor, m) : direct_qprime_k(taylor, k, m);
    typename DirectSumTrace<T>::Partial partial{m, value, false};
    const std::size_t have = trace.partials.size();
    if (have >= 2) {
      partial.converged = spread_within(trace.partials[have - 2].value, trace.partials[have - 1].value, value, rel_tol);
    }
    trace.partials.push_back(std::move(partial));
  }
  if (!trace.partials.empty() && trace.partials.back().converged) trace.limit_guess = trace.partials.back().value;
  return trace;
}

template PlainExpansion<Rational> qprime_to_q(const ShiftedExpansion<Rational>&);
template PlainExpansion<Decimal> qprime_to_q(const ShiftedExpansion<Decimal>&);
template ShiftedExpansion<Rational> q_to_qprime(const PlainExpansion<Rational>&);
template ShiftedExpansion<Decimal> q_to_qprime(const PlainExpansion<Decimal>&);
template Rational direct_qprime0(const TaylorSeries<Rational>&, long);
template Decimal direct_qprime0(const TaylorSeries<Decimal>&, long);
template Rational direct_qprime_k(const TaylorSeries<Rational>&, long, long);
template Decimal direct_qprime_k(const TaylorSeries<Decimal>&, long, long);
template DirectSumTrace<Rational> direct_trace(const TaylorSeries<Rational>&, long, std::span<const long>, double);
template DirectSumTrace<Decimal> direct_trace(const TaylorSeries<Decimal>&, long, std::span<const long>, double);

}  // namespace asymexp
