// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "hfcover/surgery.hpp"
#include "hfcover/survey.hpp"

using namespace hfcover;

static void BM_HfTableSerial(benchmark::State& state) {
  const auto k = builtin("P(-2,3,7)");
  const SurgerySlope slope(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(hf_table_serial(k, slope));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

static void BM_HfTableParallel(benchmark::State& state) {
  const auto k = builtin("P(-2,3,7)");
  const SurgerySlope slope(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(hf_table(k, slope));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_HfTableSerial)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_HfTableParallel)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

static SurveyJob bench_job() {
  SurveyJob job;
  job.profiles = {builtin("T(2,3)"), builtin("P(-2,3,7)")};
  job.cover_slopes = {-12, 12, 1, 4};
  job.base_slopes = {-12, 12, 1, 4};
  return job;
}

static void BM_SurveySerial(benchmark::State& state) {
  const auto job = bench_job();
  for (auto _ : state) benchmark::DoNotOptimize(run_survey_serial(job));
}

static void BM_SurveyParallel(benchmark::State& state) {
  const auto job = bench_job();
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(job));
}

BENCHMARK(BM_SurveySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveyParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
