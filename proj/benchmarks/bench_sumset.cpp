#include <benchmark/benchmark.h>

#include <random>

#include "addcomb/sumsets.hpp"

using namespace addcomb;

namespace {

IntSet random_set(std::size_t n, long span, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, span);
  std::vector<Int> xs;
  while (xs.size() < n) xs.push_back(Int(dist(rng)));
  return IntSet::from_vector(std::move(xs));
}

void bm_sumset_naive(benchmark::State& state) {
  IntSet a = random_set(static_cast<std::size_t>(state.range(0)),
                        10 * state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(detail::sumset_naive(a, a));
}

void bm_sumset_bitset(benchmark::State& state) {
  IntSet a = random_set(static_cast<std::size_t>(state.range(0)),
                        10 * state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(detail::sumset_bitset(a, a));
}

void bm_sumset_dispatch(benchmark::State& state) {
  IntSet a = random_set(static_cast<std::size_t>(state.range(0)),
                        10 * state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, a));
}

void bm_signed_41_40(benchmark::State& state) {
  IntSet a = random_set(100, 2000, 11);
  for (auto _ : state) benchmark::DoNotOptimize(signed_combination(a, 5, 4));
}

}  // namespace

BENCHMARK(bm_sumset_naive)->Range(64, 4096);
BENCHMARK(bm_sumset_bitset)->Range(64, 4096);
BENCHMARK(bm_sumset_dispatch)->Range(64, 4096);
BENCHMARK(bm_signed_41_40);

BENCHMARK_MAIN();
