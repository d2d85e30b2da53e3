#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "inflatable/counting.hpp"
#include "inflatable/limits.hpp"
#include "inflatable/montecarlo.hpp"
#include "inflatable/search.hpp"

using namespace inflatable;

namespace {

Permutation random_perm(std::size_t n, std::uint64_t seed) {
  SampleRng rng(seed, 0);
  return random_permutation(n, rng);
}

void BM_CountLength3Fast(benchmark::State& state) {
  const auto p = random_perm(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_length3_all(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountLength3Fast)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_CountLength3Subsets(benchmark::State& state) {
  const auto p = random_perm(static_cast<std::size_t>(state.range(0)), 1);
  const Permutation pattern{1, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(count_occurrences(pattern, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountLength3Subsets)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_LimitDensityUniform(benchmark::State& state) {
  const auto tau = random_perm(static_cast<std::size_t>(state.range(0)), 2);
  const auto pi = Permutation::identity(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(limit_density_uniform(pi, tau));
}
BENCHMARK(BM_LimitDensityUniform)->Args({9, 3})->Args({17, 3})->Args({9, 5})->Args({12, 6});

// Time to the first K hits of the length-17 centrally symmetric search.
void BM_SearchLimitedCentral17(benchmark::State& state) {
  SearchConfig config;
  config.n = 17;
  config.limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_3_inflatable(config));
}
BENCHMARK(BM_SearchLimitedCentral17)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MonteCarloSubsets(benchmark::State& state) {
  MonteCarloConfig config;
  config.j = 2000;
  config.samples = 4;
  config.subset_samples = static_cast<std::uint64_t>(state.range(0));
  const auto tau = parse_permutation("472951836");
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_limit_density(tau, Permutation{1, 3, 2}, config));
  }
}
BENCHMARK(BM_MonteCarloSubsets)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
