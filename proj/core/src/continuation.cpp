#include "asymexp/continuation.hpp"

#include <algorithm>
#include <string>

#include "asymexp/combinatorics.hpp"
#include "asymexp/error.hpp"

namespace asymexp {

void SchemeConfig::validate() const {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "m must be at least 1");
  if (precision_digits < 19) throw Error(ErrorKind::kInvalidArgument, "precision must be at least 19 digits");
  if (alpha.sign() <= 0) throw Error(ErrorKind::kInvalidArgument, "alpha must be positive");
  if (tail_window < 1) throw Error(ErrorKind::kInvalidArgument, "tail window must be at least 1");
  if (step.sign() <= 0) throw Error(ErrorKind::kNonIntegralPath, "step must be positive");
  // step = M * 10^E; 1/step is an integer iff M * 10^E divides 1.
  const Rational inverse = 1 / step.to_rational();
  if (inverse.get_den() != 1) {
    throw Error(ErrorKind::kNonIntegralPath, "1/" + step.to_string() + " is not an integer");
  }
}

long SchemeConfig::step_count() const {
  const Rational inverse = 1 / step.to_rational();
  return inverse.get_num().get_si();
}

RecenterWeights::RecenterWeights(const Decimal& step, long size, int digits) : step_(step) {
  if (size < 1) throw Error(ErrorKind::kInvalidArgument, "weights need size >= 1");
  const BinomialTable binomials(size - 1);
  std::vector<BigInt> mantissa_powers(static_cast<std::size_t>(size));
  mantissa_powers[0] = 1;
  for (long j = 1; j < size; ++j) mantissa_powers[j] = mantissa_powers[j - 1] * step.mantissa();
  rows_.resize(static_cast<std::size_t>(size));
  for (long n = 0; n < size; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
      const long j = n - k;
      row.push_back(Decimal::from_scaled(binomials(n, k) * mantissa_powers[j], step.exponent() * j, digits));
    }
  }
}

ContinuationState recenter_step(const ContinuationState& state, const RecenterWeights& weights,
                                const Decimal& alpha, long tail_window) {
  const long inputs = std::min<long>(state.converged_count, static_cast<long>(state.coeffs.size()));
  if (inputs <= 0) {
    throw Error(ErrorKind::kEmptyState, "no converged coefficients to continue at center " + state.center.to_string());
  }
  if (inputs > weights.size()) throw Error(ErrorKind::kInvalidArgument, "recenter weights too small");
  const Decimal threshold = alpha.abs();
  ContinuationState next;
  next.center = state.center + weights.step();
  next.coeffs.resize(static_cast<std::size_t>(inputs));
  next.converged_count = inputs;
  bool prefix_open = true;
  int digits = 0;
  for (long n = 0; n < inputs; ++n) digits = std::max(digits, state.coeffs[static_cast<std::size_t>(n)].digits());
  std::vector<Decimal> tail;
  for (long k = 0; k < inputs; ++k) {
    Decimal acc(0, digits);
    tail.clear();
    const long tail_begin = std::max(k + 1, inputs - tail_window);
    for (long n = k; n < inputs; ++n) {
      const Decimal& c = state.coeffs[static_cast<std::size_t>(n)];
      Decimal term = c.is_zero() ? Decimal(0, digits) : c * weights(n, k);
      if (n >= tail_begin) tail.push_back(term);
      acc += term;
    }
    next.coeffs[static_cast<std::size_t>(k)] = std::move(acc);
    if (prefix_open) {
      const bool tail_small = static_cast<long>(tail.size()) == tail_window &&
                              std::all_of(tail.begin(), tail.end(), [&](const Decimal& t) { return t.abs() < threshold; });
      if (!tail_small) {
        next.converged_count = k;
        prefix_open = false;
      }
    }
  }
  return next;
}

ContinuationState recenter_step(const ContinuationState& state, const Decimal& step, const Decimal& alpha,
                                long tail_window) {
  if (step.sign() <= 0) throw Error(ErrorKind::kInvalidArgument, "step must be positive");
  if (alpha.sign() <= 0) throw Error(ErrorKind::kInvalidArgument, "alpha must be positive");
  const long inputs = std::min<long>(state.converged_count, static_cast<long>(state.coeffs.size()));
  if (inputs <= 0) {
    throw Error(ErrorKind::kEmptyState, "no converged coefficients to continue at center " + state.center.to_string());
  }
  int digits = 0;
  for (const auto& c : state.coeffs) digits = std::max(digits, c.digits());
  const RecenterWeights weights(step, inputs, digits);
  return recenter_step(state, weights, alpha, tail_window);
}

ContinuationState continue_to_one(const AssociatedSeries<Decimal>& assoc, const SchemeConfig& config,
                                  const StepObserver& observe) {
  config.validate();
  if (static_cast<long>(assoc.size()) < config.m) {
    throw Error(ErrorKind::kInvalidArgument, "need " + std::to_string(config.m) + " associated coefficients, have " +
                                                 std::to_string(assoc.size()));
  }
  ContinuationState state;
  state.center = Decimal::exact(0);
  state.coeffs.reserve(static_cast<std::size_t>(config.m));
  for (long n = 0; n < config.m; ++n) state.coeffs.push_back(assoc.coeffs[n].with_digits(config.precision_digits));
  state.converged_count = config.m;
  const Decimal step = config.step.with_digits(0);
  const RecenterWeights weights(step, config.m, config.precision_digits);
  const long steps = config.step_count();
  for (long i = 0; i < steps; ++i) {
    const long consumed = state.converged_count;
    state = recenter_step(state, weights, config.alpha, config.tail_window);
    if (observe) observe({state.center, consumed, state.converged_count});
  }
  return state;
}

ContinuationState continue_to_one(const AssociatedSeries<Rational>& assoc, const SchemeConfig& config,
                                  const StepObserver& observe) {
  config.validate();
  AssociatedSeries<Decimal> rounded;
  const long take = std::min<long>(config.m, static_cast<long>(assoc.size()));
  rounded.coeffs.reserve(static_cast<std::size_t>(take));
  for (long n = 0; n < take; ++n) rounded.coeffs.push_back(to_decimal(assoc.coeffs[n], config.precision_digits));
  return continue_to_one(rounded, config, observe);
}

ShiftedExpansion<Decimal> extract_qprime(const ContinuationState& state, long count, const Decimal& series_center) {
  if (state.center != Decimal::exact(1)) {
    throw Error(ErrorKind::kInvalidArgument, "q' extraction needs the state at center 1, not " + state.center.to_string());
  }
  if (count < 0) throw Error(ErrorKind::kInvalidArgument, "negative coefficient count");
  if (count > state.converged_count) {
    throw Error(ErrorKind::kInsufficientConvergedCoefficients,
                "requested " + std::to_string(count) + " coefficients, only " + std::to_string(state.converged_count) +
                    " converged");
  }
  ShiftedExpansion<Decimal> out;
  out.center = series_center;
  out.coeffs.reserve(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) {
    const Decimal& c = state.coeffs[static_cast<std::size_t>(n)];
    out.coeffs.push_back(n % 2 == 0 ? c : -c);
  }
  return out;
}

}  // namespace asymexp
