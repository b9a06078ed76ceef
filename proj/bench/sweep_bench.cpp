// Serial reference drivers against the OpenMP drivers on the same sweeps.

#include <benchmark/benchmark.h>

#include "rothkit/sweeps.hpp"

namespace {

using rothkit::sweeps::Exec;

rothkit::sweeps::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

void BM_SurjectionSweep(benchmark::State& state) {
  rothkit::sweeps::SurjectionConfig cfg;
  cfg.max_entry = 5;
  cfg.max_rank = 4;
  for (auto _ : state) benchmark::DoNotOptimize(rothkit::sweeps::surjection_sweep(cfg, exec_of(state)));
}
BENCHMARK(BM_SurjectionSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RothSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rothkit::sweeps::roth_sweep(5, 4, 6, exec_of(state)));
}
BENCHMARK(BM_RothSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DegenerationOrder(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rothkit::sweeps::degeneration_order_sweep(10, 4, exec_of(state)));
}
BENCHMARK(BM_DegenerationOrder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SerreDuality(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rothkit::sweeps::serre_duality_sweep(4, 3, 6, exec_of(state)));
}
BENCHMARK(BM_SerreDuality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
