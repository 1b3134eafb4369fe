#include <benchmark/benchmark.h>

#include "asymexp/continuation.hpp"
#include "asymexp/decimal.hpp"
#include "asymexp/functions.hpp"
#include "asymexp/transform.hpp"

namespace {

void BM_DecimalMultiply(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto a = asymexp::Decimal::parse("1.2345678901234567890123456789", digits);
  const auto b = asymexp::Decimal::parse("-9.8765432109876543210987654321", digits);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_DecimalMultiply)->Arg(19)->Arg(50)->Arg(200);

void BM_DecimalDivide(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto a = asymexp::Decimal::parse("1.2345678901234567890123456789", digits);
  const auto b = asymexp::Decimal::parse("-9.8765432109876543210987654321", digits);
  for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_DecimalDivide)->Arg(19)->Arg(50)->Arg(200);

void BM_AssociatedArctan(benchmark::State& state) {
  const auto series = asymexp::arctan_coeffs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymexp::associated(series));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssociatedArctan)->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ContinueArctan(benchmark::State& state) {
  const long m = state.range(0);
  const auto assoc = asymexp::associated(asymexp::arctan_coeffs(m));
  asymexp::SchemeConfig config;
  config.m = m;
  config.step = asymexp::Decimal::parse("0.25", 0);
  config.alpha = asymexp::Decimal::parse("0.1", 0);
  for (auto _ : state) benchmark::DoNotOptimize(asymexp::continue_to_one(assoc, config));
}
BENCHMARK(BM_ContinueArctan)->Arg(201)->Arg(401)->Arg(701)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
