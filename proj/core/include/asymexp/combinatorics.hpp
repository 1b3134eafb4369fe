#pragma once

// Exact binomial arithmetic and the summation identities the direct-summation
// formulas are built from. Every routine here is integer-exact; the *_sides
// helpers evaluate both sides of an identity independently so callers can
// compare them.

#include <span>
#include <utility>
#include <vector>

#include "asymexp/exact.hpp"

namespace asymexp {

/// Binomial coefficient. Vanishes outside 0 <= k <= n, including for n < 0:
/// the summation formulas rely on out-of-range terms dropping out.
BigInt binom(long n, long k);

/// Rows 0..max_n of Pascal's triangle, built by additions.
class BinomialTable {
 public:
  explicit BinomialTable(long max_n);

  long max_n() const noexcept { return static_cast<long>(rows_.size()) - 1; }
  /// Same conventions as binom(); n must not exceed max_n().
  const BigInt& operator()(long n, long k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

/// Coefficient of x^k in (x/(1-x))^n: 0 for k < n, binom(k-1, n-1) otherwise.
BigInt f_n_expansion_coeff(long n, long k);

/// sum_{n=k..m} binom(n-1, k-1). Equals binom(m, k).
BigInt prop2_sum(long m, long k);

/// sum_{z=0..m} binom(k+z, k). Equals binom(k+m+1, k+1) (hockey stick).
BigInt prop3_sum(long m, long k);

struct IdentitySides {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of the r-fold partial summation by parts of
/// sum_{n=s..m} binom(n,k) binom(n-1,s-1):
///   lhs = sum_{n=s..m} binom(n,k) binom(n-1,s-1)
///   rhs = sum_{z=0..r-1} (-1)^z binom(m-z,k-z) binom(m,s+z)
///         + (-1)^r sum_{n=s..m-r} binom(n,k-r) binom(n-1+r,s-1+r)
/// Requires m >= 1, k >= 1, s >= 1, 1 <= r <= k.
IdentitySides prop4_sides(long m, long k, long s, long r);

/// sum_{z=0..k} (-1)^z binom(m-z, k-z) binom(m, s+z), the fully reduced form of
/// sum_{n=s..m} binom(n,k) binom(n-1,s-1).
BigInt eq124_rhs(long m, long k, long s);

/// Both sides of the index-reversal identity
///   sum_{k=0..m} binom(m,k) r[m+a-k] == sum_{k=0..m} binom(m,k) r[k+a].
/// Requires a >= 0 and m + a < r.size().
std::pair<Rational, Rational> prop1_sides(std::span<const Rational> r, long m, long a);

}  // namespace asymexp
