#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "mgh/isometry.hpp"

namespace {

void BM_isometry_group_discrete(benchmark::State& state) {
  auto x = mgh::bench::discrete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mgh::isometry_group(x).elements.size());
}
BENCHMARK(BM_isometry_group_discrete)->Arg(5)->Arg(6)->Arg(7);

void BM_isometry_group_cycle(benchmark::State& state) {
  auto x = mgh::bench::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mgh::isometry_group(x).elements.size());
}
BENCHMARK(BM_isometry_group_cycle)->Arg(6)->Arg(8)->Arg(10);

void BM_iso_height_segment(benchmark::State& state) {
  auto x = mgh::bench::segment(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mgh::iso_height(x).height);
}
BENCHMARK(BM_iso_height_segment)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
