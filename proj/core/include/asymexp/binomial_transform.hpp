#pragma once

#include <span>
#include <vector>

#include "asymexp/scalar.hpp"

namespace asymexp::detail {

/// out[0] = in[0]; out[n] = sum_{s=1..n} sign(n,s) binom(n-1, s-1) in[s] for n >= 1,
/// where sign is +1, or (-1)^(n-s) when `alternating`. The two variants are
/// mutually inverse.
template <Scalar T>
std::vector<T> binomial_transform(std::span<const T> in, bool alternating);

extern template std::vector<Rational> binomial_transform<Rational>(std::span<const Rational>, bool);
extern template std::vector<Decimal> binomial_transform<Decimal>(std::span<const Decimal>, bool);

}  // namespace asymexp::detail
