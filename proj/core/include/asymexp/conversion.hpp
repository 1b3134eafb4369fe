#pragma once

#include <optional>
#include <span>
#include <vector>

#include "asymexp/series.hpp"

namespace asymexp {

/// Re-expands sum q'_n / (x - x0 + 1)^n in powers of 1/(x - x0):
///   q_0 = q'_0,  q_n = sum_{k=1..n} (-1)^(n+k) binom(n-1, k-1) q'_k  (n >= 1).
template <Scalar T>
PlainExpansion<T> qprime_to_q(const ShiftedExpansion<T>& shifted);

/// Inverse of qprime_to_q().
template <Scalar T>
ShiftedExpansion<T> q_to_qprime(const PlainExpansion<T>& plain);

/// m-th partial sum for q'_0 straight from Taylor coefficients:
///   sum_{s=0..m} c_s binom(m, s).
template <Scalar T>
T direct_qprime0(const TaylorSeries<T>& taylor, long m);

/// m-th partial sum for q'_k (k >= 1) straight from Taylor coefficients:
///   (-1)^k sum_{s=1..m} c_s sum_{n=0..k} (-1)^n binom(m-n, k-n) binom(m, s+n).
template <Scalar T>
T direct_qprime_k(const TaylorSeries<T>& taylor, long k, long m);

template <Scalar T>
struct DirectSumTrace {
  long k = 0;
  struct Partial {
    long m = 0;
    T value{};
    bool converged = false;  ///< last three partials up to here agree
  };
  std::vector<Partial> partials;
  std::optional<T> limit_guess;
};

/// Evaluates the k-th partial sum at each m (strictly increasing, each below
/// the number of Taylor coefficients). Three partials agree when their spread
/// is at most rel_tol * max(1, |latest|); the limit guess is the final
/// partial when the last three agree.
template <Scalar T>
DirectSumTrace<T> direct_trace(const TaylorSeries<T>& taylor, long k, std::span<const long> m_values,
                               double rel_tol);

}  // namespace asymexp
