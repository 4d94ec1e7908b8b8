#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "mgh/orders.hpp"

namespace {

void BM_preceq_segment_onto_segment(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto big = mgh::bench::segment(n);
  auto small = mgh::bench::segment(n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(mgh::preceq(small, big).holds);
}
BENCHMARK(BM_preceq_segment_onto_segment)->Arg(6)->Arg(8)->Arg(10);

void BM_preceq_i_cycle_in_cycle(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto big = mgh::bench::cycle(n);
  auto small = mgh::bench::segment(3);
  for (auto _ : state) benchmark::DoNotOptimize(mgh::preceq_i(small, big).holds);
}
BENCHMARK(BM_preceq_i_cycle_in_cycle)->Arg(8)->Arg(12);

void BM_common_superspace(benchmark::State& state) {
  std::vector<mgh::FiniteMetricSpace> family{mgh::bench::segment(4), mgh::bench::cycle(5),
                                             mgh::bench::discrete(4)};
  for (auto _ : state) benchmark::DoNotOptimize(mgh::common_superspace(family).space.size());
}
BENCHMARK(BM_common_superspace);

void BM_minimal_epsilon_net(benchmark::State& state) {
  auto x = mgh::bench::segment(static_cast<std::size_t>(state.range(0)));
  mgh::Rational eps(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mgh::minimal_epsilon_net(x, eps).size());
}
BENCHMARK(BM_minimal_epsilon_net)->Arg(8)->Arg(12);

}  // namespace
