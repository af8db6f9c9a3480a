#include <benchmark/benchmark.h>

#include <vector>

#include "cascade/attractors.hpp"
#include "cascade/basin.hpp"
#include "cascade/lattice.hpp"
#include "cascade/parameter_analysis.hpp"

namespace {

void BM_Step(benchmark::State& state) {
  const cascade::Threshold t(0.95);
  std::vector<double> sites(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::step_in_place(sites, t.c1()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Step)->Arg(2)->Arg(8)->Arg(64);

void BM_RenderBasins(benchmark::State& state) {
  const cascade::Threshold t(0.84);
  cascade::GridSpec spec;
  spec.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::render_basins(t, spec, 1).class_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_RenderBasins)->Arg(63)->Arg(125)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const cascade::Threshold t(0.84);
  cascade::CensusOptions options;
  options.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cascade::census(t, 3, 1000, 1, options).attractors.size());
  }
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

void BM_StarValues(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cascade::star_values(8).back().value);
}
BENCHMARK(BM_StarValues);

}  // namespace

BENCHMARK_MAIN();
