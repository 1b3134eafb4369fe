#include "asymexp/combinatorics.hpp"

#include "asymexp/error.hpp"

namespace asymexp {

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BinomialTable::BinomialTable(long max_n) {
  if (max_n < 0) throw Error(ErrorKind::kInvalidArgument, "BinomialTable needs max_n >= 0");
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  rows_.push_back({BigInt(1)});
  for (long n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    for (long k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(row));
  }
}

const BigInt& BinomialTable::operator()(long n, long k) const {
  if (n > max_n()) throw Error(ErrorKind::kInvalidArgument, "binomial table row out of range");
  if (n < 0 || k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt f_n_expansion_coeff(long n, long k) {
  if (n < 1 || k < 0) throw Error(ErrorKind::kInvalidArgument, "f_n_expansion_coeff needs n >= 1, k >= 0");
  if (k < n) return 0;
  return binom(k - 1, n - 1);
}

BigInt prop2_sum(long m, long k) {
  if (m < 1 || k < 1 || k >= m) throw Error(ErrorKind::kInvalidArgument, "prop2_sum needs m > k >= 1");
  BigInt sum = 0;
  for (long n = k; n <= m; ++n) sum += binom(n - 1, k - 1);
  return sum;
}

BigInt prop3_sum(long m, long k) {
  if (m < 1 || k < 0) throw Error(ErrorKind::kInvalidArgument, "prop3_sum needs m >= 1, k >= 0");
  BigInt sum = 0;
  for (long z = 0; z <= m; ++z) sum += binom(k + z, k);
  return sum;
}

IdentitySides prop4_sides(long m, long k, long s, long r) {
  if (m < 1 || k < 1 || s < 1 || r < 1 || r > k) {
    throw Error(ErrorKind::kInvalidArgument, "prop4_sides needs m, k, s >= 1 and 1 <= r <= k");
  }
  IdentitySides out;
  for (long n = s; n <= m; ++n) out.lhs += binom(n, k) * binom(n - 1, s - 1);
  for (long z = 0; z < r; ++z) out.rhs += sign_power(z) * binom(m - z, k - z) * binom(m, s + z);
  BigInt rest = 0;
  for (long n = s; n <= m - r; ++n) rest += binom(n, k - r) * binom(n - 1 + r, s - 1 + r);
  out.rhs += sign_power(r) * rest;
  return out;
}

BigInt eq124_rhs(long m, long k, long s) {
  if (k < 1 || s < 1) throw Error(ErrorKind::kInvalidArgument, "eq124_rhs needs k, s >= 1");
  BigInt sum = 0;
  for (long z = 0; z <= k; ++z) sum += sign_power(z) * binom(m - z, k - z) * binom(m, s + z);
  return sum;
}

std::pair<Rational, Rational> prop1_sides(std::span<const Rational> r, long m, long a) {
  if (m < 0 || a < 0 || static_cast<std::size_t>(m + a) >= r.size()) {
    throw Error(ErrorKind::kInvalidArgument, "prop1_sides index out of range");
  }
  Rational lhs = 0;
  Rational rhs = 0;
  for (long k = 0; k <= m; ++k) {
    const Rational w(binom(m, k));
    lhs += w * r[static_cast<std::size_t>(m + a - k)];
    rhs += w * r[static_cast<std::size_t>(k + a)];
  }
  return {lhs, rhs};
}

}  // namespace asymexp
