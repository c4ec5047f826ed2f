#include <benchmark/benchmark.h>

#include "frobtrace/ec_core.hpp"
#include "frobtrace/equidist.hpp"
#include "frobtrace/experiments.hpp"
#include "frobtrace/polyroots.hpp"

using namespace frobtrace;

static void BM_CountPoints(benchmark::State& state) {
  const ec::CurveSpec curve(1, 1);
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ec::count_points(curve, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountPoints)->Arg(1009)->Arg(100003)->Arg(1000003)->Complexity(benchmark::oN);

static void BM_TraceSequence(benchmark::State& state) {
  const ec::FrobeniusAngle angle(-4, 13);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ec::normalized_trace_sequence(angle, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TraceSequence)->Arg(10000)->Arg(1000000);

static void BM_WeylSum(benchmark::State& state) {
  const auto seq = ec::normalized_trace_sequence(ec::FrobeniusAngle(-4, 13), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equidist::weyl_sum(seq, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeylSum)->Arg(1000000);

static void BM_StarDiscrepancy(benchmark::State& state) {
  const auto seq = equidist::map_to_unit(
      ec::normalized_trace_sequence(ec::FrobeniusAngle(-4, 13), static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(equidist::star_discrepancy(seq));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StarDiscrepancy)->Arg(100000)->Arg(1000000);

static void BM_PrimeSweep(benchmark::State& state) {
  const ec::CurveSpec curve(1, 1);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(experiments::prime_sweep(curve, static_cast<std::uint64_t>(state.range(0)), threads));
  }
}
BENCHMARK(BM_PrimeSweep)->Args({10000, 1})->Args({100000, 1})->Args({100000, 4})->Unit(benchmark::kMillisecond);

static void BM_FindRoots(benchmark::State& state) {
  const auto f = poly::shift_constant(poly::cyclotomic(static_cast<int>(state.range(0))), -3);
  for (auto _ : state) benchmark::DoNotOptimize(poly::find_roots(f));
}
BENCHMARK(BM_FindRoots)->Arg(5)->Arg(13)->Arg(97);

BENCHMARK_MAIN();
