#include <benchmark/benchmark.h>

#include "chatelet/factor.hpp"
#include "chatelet/obstruction.hpp"
#include "chatelet/oracle.hpp"

using namespace chatelet;

namespace {

ChateletSurface counterexample() { return {Rational(5), Rational(3, 5), QPoly{1, 0, 7, 0, 5}}; }

void BM_FactorOverQuad(benchmark::State& state) {
  const QPoly P{1, 0, 7, 0, 5};
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_quad(P, BigInt(29)));
}
BENCHMARK(BM_FactorOverQuad);

void BM_LocalPoints(benchmark::State& state) {
  const ChateletSurface X = counterexample();
  const Completion v = Completion::of(Place::finite(BigInt(static_cast<long>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(local_points(X, v).nonempty);
}
BENCHMARK(BM_LocalPoints)->Arg(2)->Arg(3)->Arg(5)->Arg(29);

void BM_BmVerdictSqrt29(benchmark::State& state) {
  const ChateletSurface X = counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(bm_verdict(X, Field{29}).verdict);
  state.SetLabel("Q(sqrt(29))");
}
BENCHMARK(BM_BmVerdictSqrt29)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const ChateletSurface X = counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(X).problematic.size());
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_OracleSurface(benchmark::State& state) {
  const ChateletSurface X = counterexample();
  const long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::surface_solvable(X.a(), X.c(), X.P(), p, oracle::kPrecision));
}
BENCHMARK(BM_OracleSurface)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
