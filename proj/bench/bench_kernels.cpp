#include <benchmark/benchmark.h>

#include "permcm/betti.hpp"
#include "permcm/complex.hpp"
#include "permcm/sweep.hpp"

using namespace permcm;

namespace {

// A CM graph on 12 vertices: the Hochster sweep covers 4096 subsets.
SimplicialComplex bench_complex() {
  static const SimplicialComplex c =
      independence_complex(graph_from_permutation(Permutation::parse("3,1,2,6,4,5,9,7,8,12,10,11")));
  return c;
}

void BM_HochsterSerial(benchmark::State& state) {
  const auto c = bench_complex();
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti_table(c, Execution::Serial));
}

void BM_HochsterParallel(benchmark::State& state) {
  const auto c = bench_complex();
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti_table(c, Execution::Parallel));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto t = static_cast<Theorem>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(t, 6, Execution::Serial));
  state.SetLabel(std::string(theorem_name(t)));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto t = static_cast<Theorem>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(t, 6, Execution::Parallel));
  state.SetLabel(std::string(theorem_name(t)));
}

}  // namespace

BENCHMARK(BM_HochsterSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HochsterParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)
    ->Arg(static_cast<int>(Theorem::vd))
    ->Arg(static_cast<int>(Theorem::ainv))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->Arg(static_cast<int>(Theorem::vd))
    ->Arg(static_cast<int>(Theorem::ainv))
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
