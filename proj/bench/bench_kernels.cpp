#include <benchmark/benchmark.h>

#include <random>

#include "bentcode/analysis/spectrum.hpp"
#include "bentcode/kernels/kernels.hpp"

using namespace bentcode;

namespace {

std::vector<Eisenstein> random_phases(int n) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> trit(0, 2);
  std::vector<Eisenstein> v(pow3(n));
  for (auto& x : v) x = Eisenstein::omega_pow(trit(rng));
  return v;
}

std::vector<std::uint32_t> random_set(int n, std::size_t k) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(pow3(n)) - 1);
  std::vector<std::uint32_t> s(k);
  for (auto& x : s) x = pick(rng);
  return s;
}

void BM_transform_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = random_phases(n);
  for (auto _ : state) {
    auto v = base;
    kernels::character_transform_serial(v, n);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_transform_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = random_phases(n);
  for (auto _ : state) {
    auto v = base;
    kernels::character_transform(v, n);
    benchmark::DoNotOptimize(v.data());
  }
  state.counters["threads"] = kernels::max_threads();
}

void BM_weights_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_set(n, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::codeword_weights_serial(n, s));
}

void BM_weights_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_set(n, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::codeword_weights(n, s));
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_transform_serial)->DenseRange(6, 12, 2);
BENCHMARK(BM_transform_parallel)->DenseRange(6, 12, 2);
BENCHMARK(BM_weights_serial)->Args({6, 98})->Args({7, 270})->Args({8, 756});
BENCHMARK(BM_weights_parallel)->Args({6, 98})->Args({7, 270})->Args({8, 756});

BENCHMARK_MAIN();
