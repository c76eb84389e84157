// Serial reference path vs OpenMP path for each parallel kernel.
// Arg 0 selects the serial path, otherwise the worker count.
#include <benchmark/benchmark.h>

#include "orthopat/catalog.hpp"
#include "orthopat/obstructions.hpp"
#include "orthopat/pattern.hpp"
#include "orthopat/search.hpp"

namespace {

using namespace orthopat;

Execution exec_for(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial() : Execution::parallel(static_cast<int>(state.range(0)));
}

void BM_Census5(benchmark::State& state) {
  const Execution exec = exec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposable_sq(5, exec));
}

void BM_ColumnDependence(benchmark::State& state) {
  const Execution exec = exec_for(state);
  const ZeroPattern p = special_pattern("bbs11");
  for (auto _ : state) benchmark::DoNotOptimize(column_dependence_infeasible(p, exec));
}

void BM_EnumerateAll(benchmark::State& state) {
  SearchProblem sp;
  sp.pattern = resolve_pattern_reference("@n=4,k=1");
  sp.mode = SearchMode::EnumerateAll;
  sp.denom_min = 1;
  sp.denom_max = 65;
  sp.exec = exec_for(state);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SearchResult r = solve(sp);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.solutions);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_MinimalFive(benchmark::State& state) {
  SearchProblem sp;
  sp.pattern = resolve_pattern_reference("@n=5,k=23");
  sp.exec = exec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_denominator(sp, 100));
}

void BM_FindFive(benchmark::State& state) {
  SearchProblem sp;
  sp.pattern = resolve_pattern_reference("@n=5,k=5");
  sp.denom_min = 105;
  sp.denom_max = 105;
  sp.exec = exec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve(sp));
}

void BM_VerifyCatalog(benchmark::State& state) {
  const Execution exec = exec_for(state);
  const std::vector<CatalogEntry> entries = load_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(entries, exec));
}

void workers(benchmark::internal::Benchmark* b) {
  b->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Census5)->Apply(workers);
BENCHMARK(BM_ColumnDependence)->Apply(workers);
BENCHMARK(BM_EnumerateAll)->Apply(workers);
BENCHMARK(BM_MinimalFive)->Apply(workers);
BENCHMARK(BM_FindFive)->Apply(workers);
BENCHMARK(BM_VerifyCatalog)->Apply(workers);

BENCHMARK_MAIN();
