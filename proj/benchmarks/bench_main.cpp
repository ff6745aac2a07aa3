#include <benchmark/benchmark.h>

#include "tripext/cube.hpp"
#include "tripext/detach.hpp"
#include "tripext/extension.hpp"
#include "tripext/factorize.hpp"
#include "tripext/list_color.hpp"

using namespace tripext;

namespace {

ExtensionInstance three_into(int nY, int lambda) {
  Coloring f(3, static_cast<int>(colors_needed(nY, lambda)));
  for (int i = 1; i <= lambda; ++i) f.add(i, Edge{1, 2, 3});
  return make_extension_instance(3, nY, lambda, f);
}

void BM_ListColor(benchmark::State& state) {
  const ExtensionInstance inst = three_into(static_cast<int>(state.range(0)), 1);
  const Hypergraph h = pair_multigraph(inst);
  const ListAssignment lists = gamma_lists(inst);
  const QuotaVector q = quotas(inst);
  for (auto _ : state) benchmark::DoNotOptimize(solve_list_coloring(h, lists, q));
}
BENCHMARK(BM_ListColor)->Arg(9)->Arg(12)->Arg(15);

void BM_Extend(benchmark::State& state) {
  const ExtensionInstance inst = three_into(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(extend(inst));
}
BENCHMARK(BM_Extend)->Args({6, 1})->Args({9, 1})->Args({9, 2})->Args({12, 1})->Unit(benchmark::kMillisecond);

void BM_DetachSplit(benchmark::State& state) {
  const DetachmentTask task = min_coloring_task(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(detach(task));
}
BENCHMARK(BM_DetachSplit)->DenseRange(6, 15, 3)->Unit(benchmark::kMillisecond);

void BM_DetachSearch(benchmark::State& state) {
  const DetachmentTask task = min_coloring_task(static_cast<int>(state.range(0)), 1);
  DetachOptions options;
  options.search_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(detach(task, options));
}
BENCHMARK(BM_DetachSearch)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MinColoring(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_coloring(n, 2));
}
BENCHMARK(BM_MinColoring)->Arg(7)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MixedSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_mixed_factorization(n));
}
BENCHMARK(BM_MixedSearch)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
