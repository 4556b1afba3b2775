// Serial against OpenMP execution of the three trial-parallel kernels.

#include <benchmark/benchmark.h>

#include "kinkline/harness.hpp"
#include "kinkline/verify.hpp"

using namespace kinkline;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_Contraction(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(exhaustive_contraction(5, 500, 1, mode(st)));
  }
}

void BM_SequenceExperiment(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(run_sequence_experiment(8, 200, 1, mode(st)));
  }
}

void BM_RateTable(benchmark::State& st) {
  TrialConfig cfg;
  cfg.functions = suite("nu");
  cfg.algorithms = table_columns(false);
  cfg.trials = 20;
  cfg.seed = 1;
  cfg.execution = mode(st);
  for (auto _ : st) {
    benchmark::DoNotOptimize(run_benchmark(cfg));
  }
}

}  // namespace

BENCHMARK(BM_Contraction)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SequenceExperiment)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RateTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
