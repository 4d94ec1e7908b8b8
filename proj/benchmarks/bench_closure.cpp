#include <benchmark/benchmark.h>

#include <random>

#include "mgh/pseudometric.hpp"

namespace {

mgh::RationalMatrix random_cost(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(1, 60);
  mgh::RationalMatrix cost(n, std::vector<mgh::Rational>(n, mgh::Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cost[i][j] = cost[j][i] = mgh::Rational(num(rng), 7);
  return cost;
}

void BM_pseudometric_closure(benchmark::State& state) {
  auto cost = random_cost(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(mgh::pseudometric_closure(cost).size());
}
BENCHMARK(BM_pseudometric_closure)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
