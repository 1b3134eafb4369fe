#pragma once

#include <functional>
#include <vector>

#include "asymexp/decimal.hpp"
#include "asymexp/series.hpp"

namespace asymexp {

/// Parameters of the recentering scheme that carries u from center 0 to 1.
struct SchemeConfig {
  long m = 0;               ///< associated coefficients fed into the first step
  Decimal step;             ///< center increment; 1/step must be an integer
  Decimal alpha;            ///< tail threshold deciding which coefficients survive a step
  int precision_digits = 19;
  /// Number of trailing terms of a recentering sum that must all fall below
  /// alpha before the continued coefficient is trusted. Two keeps a single
  /// structural zero coefficient from passing for a decayed tail.
  long tail_window = 2;

  /// Throws kInvalidArgument for out-of-range fields, kNonIntegralPath when
  /// 1/step is not a positive integer.
  void validate() const;
  /// 1/step; validate() first.
  long step_count() const;
};

/// Taylor coefficients of u at `center`. Only the first `converged_count`
/// entries are trusted; the next step consumes exactly that prefix.
struct ContinuationState {
  Decimal center;
  std::vector<Decimal> coeffs;
  long converged_count = 0;
};

/// binom(n, k) * step^(n-k) for 0 <= k <= n < size, each rounded once.
class RecenterWeights {
 public:
  RecenterWeights(const Decimal& step, long size, int digits);

  long size() const noexcept { return static_cast<long>(rows_.size()); }
  const Decimal& step() const noexcept { return step_; }
  const Decimal& operator()(long n, long k) const { return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }

 private:
  Decimal step_;
  std::vector<std::vector<Decimal>> rows_;
};

/// One recentering by `step`:
///   c_k(x + step) = sum_{n=k..N-1} c_n(x) binom(n, k) step^(n-k),  N = state.converged_count.
/// Every output sum runs over all N inputs. Output k is converged when its
/// last `tail_window` terms (n > k) are all below alpha in magnitude; the new
/// converged_count is the length of the converged prefix. Throws
/// kEmptyState when there is nothing to consume.
ContinuationState recenter_step(const ContinuationState& state, const Decimal& step, const Decimal& alpha,
                                long tail_window = 2);
ContinuationState recenter_step(const ContinuationState& state, const RecenterWeights& weights,
                                const Decimal& alpha, long tail_window = 2);

struct StepRecord {
  Decimal center;  ///< center reached by this step
  long consumed = 0;
  long converged = 0;
};

using StepObserver = std::function<void(const StepRecord&)>;

/// Applies 1/step recentering steps to the first m coefficients, landing on center 1.
ContinuationState continue_to_one(const AssociatedSeries<Decimal>& assoc, const SchemeConfig& config,
                                  const StepObserver& observe = {});
/// Rounds exact coefficients to the configured precision first.
ContinuationState continue_to_one(const AssociatedSeries<Rational>& assoc, const SchemeConfig& config,
                                  const StepObserver& observe = {});

/// q'_n = (-1)^n c_n(1) for n < count. The state must sit at center 1 and
/// have at least `count` converged coefficients.
ShiftedExpansion<Decimal> extract_qprime(const ContinuationState& state, long count,
                                         const Decimal& series_center = Decimal());

}  // namespace asymexp
