#include <benchmark/benchmark.h>

#include "cdrkit/verify.hpp"

using namespace cdrkit;

namespace {

SweepConfig config(Property p, std::size_t n, bool exhaustive) {
  SweepConfig c;
  c.property = p;
  c.n = n;
  c.exhaustive = exhaustive;
  c.samples = 2000;
  c.seed = 1;
  return c;
}

using Runner = SweepReport (*)(const SweepConfig&);

void sweep(benchmark::State& state, Runner run, Property p, std::size_t n, bool exhaustive) {
  const auto c = config(p, n, exhaustive);
  for (auto _ : state) {
    auto report = run(c);
    benchmark::DoNotOptimize(report.passed);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * sweep_case_count(c)));
}

}  // namespace

BENCHMARK_CAPTURE(sweep, parity_n5_serial, run_sweep_serial, Property::Parity, 5, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, parity_n5_parallel, run_sweep_parallel, Property::Parity, 5, true)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, steps_n7_serial, run_sweep_serial, Property::Steps, 7, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, steps_n7_parallel, run_sweep_parallel, Property::Steps, 7, false)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, commutation_n10_serial, run_sweep_serial, Property::Commutation, 10, false)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, commutation_n10_parallel, run_sweep_parallel, Property::Commutation, 10, false)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
