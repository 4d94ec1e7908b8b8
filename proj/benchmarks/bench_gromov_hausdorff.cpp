#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "mgh/gromov_hausdorff.hpp"

namespace {

void BM_gh_exact_segment_vs_cycle(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = mgh::bench::segment(n);
  auto b = mgh::bench::cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(mgh::gh_exact(a, b).lower);
}
BENCHMARK(BM_gh_exact_segment_vs_cycle)->Arg(4)->Arg(5)->Arg(6);

void BM_gh_bounds_large(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = mgh::bench::segment(n);
  auto b = mgh::bench::cycle(n);
  for (auto _ : state) benchmark::DoNotOptimize(mgh::gh_bounds(a, b).upper);
}
BENCHMARK(BM_gh_bounds_large)->Arg(12)->Arg(24);

}  // namespace
