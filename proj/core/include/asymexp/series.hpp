#pragma once

#include <cstddef>
#include <vector>

#include "asymexp/scalar.hpp"

namespace asymexp {

/// f(x) = sum_n coeffs[n] (x - center)^n, truncated to the stored prefix.
template <Scalar T>
struct TaylorSeries {
  T center{};
  std::vector<T> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
};

/// Taylor coefficients at 0 of the associated function u(x) = f(center + x/(1-x)).
template <Scalar T>
struct AssociatedSeries {
  std::vector<T> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
};

/// f(x) ~ sum_n coeffs[n] / (x - center + 1)^n as x -> infinity.
template <Scalar T>
struct ShiftedExpansion {
  T center{};
  std::vector<T> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
};

/// f(x) ~ sum_n coeffs[n] / (x - center)^n as x -> infinity.
template <Scalar T>
struct PlainExpansion {
  T center{};
  std::vector<T> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
};

}  // namespace asymexp
