// Serial reference kernels against their OpenMP counterparts.
// The thread-count argument (second range) applies to the parallel runs only.

#include <benchmark/benchmark.h>

#include "hurwitz/combinatorial.hpp"
#include "hurwitz/geometric.hpp"
#include "hurwitz/parallel.hpp"
#include "hurwitz/reference.hpp"
#include "hurwitz/tau.hpp"

using namespace hurwitz;

namespace {

WeightConfig two_species(int n) {
  return WeightConfig{n, {parse_species("E:q=1/2"), parse_species("H:p=1/5")}};
}

// (k, 1^{n-k})
Partition cycle(int n, int k) {
  std::vector<int> parts(n - k + 1, 1);
  parts[0] = k;
  return Partition(parts);
}

BranchConfiguration factorization_config(int n) {
  return BranchConfiguration{n, {cycle(n, 2), cycle(n, 3)}, Partition::row(n), Partition::identity(n)};
}

void factorizations_serial(benchmark::State& state) {
  auto config = factorization_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_factorizations(config));
}

void factorizations_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  auto config = factorization_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_factorizations(config));
  set_thread_count(0);
}

void paths_serial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::path_counts(5, d, {2, 1, 1, 1}, {3, 2}));
}

void paths_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_counts(5, d, {2, 1, 1, 1}, {3, 2}));
  set_thread_count(0);
}

void geometric_serial(benchmark::State& state) {
  auto config = two_species(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::geometric_table(config, {2, 2}));
}

void geometric_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  auto config = two_species(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geometric_table(config, {2, 2}));
  set_thread_count(0);
}

void tau_serial(benchmark::State& state) {
  auto config = two_species(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::tau_coefficients(config, 0, {3, 3}));
}

void tau_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  auto config = two_species(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tau_coefficients(config, 0, {3, 3}));
  set_thread_count(0);
}

}  // namespace

BENCHMARK(factorizations_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(factorizations_parallel)->ArgsProduct({{5, 6}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(paths_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(paths_parallel)->ArgsProduct({{3, 4}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(geometric_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(geometric_parallel)->ArgsProduct({{4, 6}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(tau_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(tau_parallel)->ArgsProduct({{6, 10}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
