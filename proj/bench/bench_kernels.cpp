// Serial reference against the OpenMP kernels on the worked examples and a
// Veronese fiber product.

#include <benchmark/benchmark.h>

#include "torfib/criteria.hpp"
#include "torfib/datasets.hpp"
#include "torfib/veronese.hpp"

using namespace torfib;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_NormalityNonNormal(benchmark::State& state) {
  Dataset d = non_normal_product();
  IntegerMatrix D = tfp_config(d.A, d.B, d.C).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(is_normal(D, mode(state)));
  set_label(state);
}

void BM_NormalityVeronese(benchmark::State& state) {
  PartitionedVeronese pv = partition_blocked_config(2, PartitionGrading(3, {{0, 1}, {2}}));
  IntegerMatrix D = tfp_config(pv.A, pv.B, pv.B).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(is_normal(D, mode(state)));
  set_label(state);
}

void BM_AnalyzeHierarchical(benchmark::State& state) {
  Dataset h = hierarchical_model();
  SegrePresentation P = segre_presentation(h.A, h.B, h.C);
  AnalyzeOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_product(P, options));
  set_label(state);
}

void BM_AnalyzeVeronese(benchmark::State& state) {
  PartitionedVeronese pv = partition_blocked_config(3, PartitionGrading(4, {{0, 1}, {2, 3}}));
  SegrePresentation P = segre_presentation(pv.A, pv.B, pv.A);
  AnalyzeOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_product(P, options));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_NormalityNonNormal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalityVeronese)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeHierarchical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeVeronese)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
