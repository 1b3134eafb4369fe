#pragma once

#include <optional>
#include <vector>

#include "asymexp/series.hpp"

namespace asymexp {

/// Coefficients of the associated function u(x) = f(x0 + x/(1-x)):
///   c*_0 = c_0,  c*_n = sum_{s=1..n} binom(n-1, s-1) c_s  (n >= 1).
/// c*_n depends on c_0..c_n only. Exact on rational input.
template <Scalar T>
AssociatedSeries<T> associated(const TaylorSeries<T>& series);

/// Inverse of associated(): c_n = sum_{s=1..n} (-1)^(n-s) binom(n-1, s-1) c*_s.
template <Scalar T>
std::vector<T> associated_inverse(const AssociatedSeries<T>& assoc);

struct RatioSample {
  long n = 0;
  double estimate = 0.0;  // (|c*_n| / |c*_{n+lag}|)^(1/lag)
};

/// Lagged ratio-test estimates of the radius of convergence of the associated series.
struct RadiusEstimate {
  long lag = 1;
  std::vector<RatioSample> values;
  /// Last estimate, when the final three agree within the requested relative
  /// tolerance; empty means undetermined.
  std::optional<double> limit_guess;
};

/// Needs lag >= 1 and at least lag + 2 coefficients. Pairs with a zero member
/// are skipped; throws kAllComparisonsDegenerate when none remain.
template <Scalar T>
RadiusEstimate estimate_radius(const AssociatedSeries<T>& assoc, long lag, double rel_tol = 1e-3);

}  // namespace asymexp
