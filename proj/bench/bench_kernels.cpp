#include <benchmark/benchmark.h>

#include "plumb/bounds.hpp"
#include "plumb/catalog.hpp"
#include "plumb/kernels.hpp"
#include "plumb/suite.hpp"

using namespace plumb;

namespace {

const std::vector<BraidWord>& words() {
  static const auto w = random_connected_braids(1000, 7);
  return w;
}

// A closure with a few hundred spanning trees.
const SeifertGraph& dense_graph() {
  static const auto g = closure_seifert_graph(parse_braid_word("1 1 -1 2 -2 2 3 3 -3 4 4 -4 1 2 3 4 -1 2"));
  return g;
}

const std::vector<SpanningTree>& dense_trees() {
  static const auto t = enumerate_spanning_trees(dense_graph(), 100000).trees;
  return t;
}

void BM_SuiteSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite_serial(words()).passed);
}

void BM_SuiteParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite_parallel(words()).passed);
}

void BM_TreeMinSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_fpbk_over_trees_serial(dense_graph(), dense_trees()));
  state.counters["trees"] = static_cast<double>(dense_trees().size());
}

void BM_TreeMinParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_fpbk_over_trees_parallel(dense_graph(), dense_trees()));
  state.counters["trees"] = static_cast<double>(dense_trees().size());
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TreeMinSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeMinParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
