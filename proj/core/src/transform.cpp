#include "asymexp/transform.hpp"

#include <algorithm>
#include <cmath>

#include "asymexp/binomial_transform.hpp"
#include "asymexp/error.hpp"

namespace asymexp {

namespace {

// (|here| / |ahead|)^(1/lag). The ratio is formed exactly, so exact ratios
// such as 2 come out exact; logs take over only outside the double range.
double lagged_ratio(const Rational& here, const Rational& ahead, long lag) {
  const Rational ratio = abs(here / ahead);
  const double d = ratio.get_d();
  if (std::isnormal(d) && std::isfinite(d)) return lag == 1 ? d : std::pow(d, 1.0 / static_cast<double>(lag));
  return std::exp((log_abs(here) - log_abs(ahead)) / static_cast<double>(lag));
}

double lagged_ratio(const Decimal& here, const Decimal& ahead, long lag) {
  return lagged_ratio(here.to_rational(), ahead.to_rational(), lag);
}

}  // namespace

template <Scalar T>
AssociatedSeries<T> associated(const TaylorSeries<T>& series) {
  return {detail::binomial_transform<T>(series.coeffs, false)};
}

template <Scalar T>
std::vector<T> associated_inverse(const AssociatedSeries<T>& assoc) {
  return detail::binomial_transform<T>(assoc.coeffs, true);
}

template <Scalar T>
RadiusEstimate estimate_radius(const AssociatedSeries<T>& assoc, long lag, double rel_tol) {
  if (lag < 1) throw Error(ErrorKind::kInvalidArgument, "radius estimation needs lag >= 1");
  const long size = static_cast<long>(assoc.size());
  if (size < lag + 2) {
    throw Error(ErrorKind::kInvalidArgument, "radius estimation needs at least lag + 2 coefficients");
  }
  RadiusEstimate out;
  out.lag = lag;
  for (long n = 0; n + lag < size; ++n) {
    const T& here = assoc.coeffs[n];
    const T& ahead = assoc.coeffs[n + lag];
    if (is_zero(here) || is_zero(ahead)) continue;
    out.values.push_back({n, lagged_ratio(here, ahead, lag)});
  }
  if (out.values.empty()) {
    throw Error(ErrorKind::kAllComparisonsDegenerate, "every lagged coefficient pair contains a zero");
  }
  if (out.values.size() >= 3) {
    const auto tail = std::span(out.values).last(3);
    const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end(), [](const auto& a, const auto& b) {
      return a.estimate < b.estimate;
    });
    const double last = tail.back().estimate;
    if (hi->estimate - lo->estimate <= rel_tol * std::fabs(last)) out.limit_guess = last;
  }
  return out;
}

template AssociatedSeries<Rational> associated(const TaylorSeries<Rational>&);
template AssociatedSeries<Decimal> associated(const TaylorSeries<Decimal>&);
template std::vector<Rational> associated_inverse(const AssociatedSeries<Rational>&);
template std::vector<Decimal> associated_inverse(const AssociatedSeries<Decimal>&);
template RadiusEstimate estimate_radius(const AssociatedSeries<Rational>&, long, double);
template RadiusEstimate estimate_radius(const AssociatedSeries<Decimal>&, long, double);

}  // namespace asymexp
