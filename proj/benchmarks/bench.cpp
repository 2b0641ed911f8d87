#include <benchmark/benchmark.h>

#include "strata/minors.hpp"
#include "strata/seed.hpp"

using namespace strata;

namespace {

const char* kWord = "s1 s3 s5 s2 s4 s1 s3 s5 s2 s4 s1 s3 s5 s4";

Stratum example() { return Stratum::make("A5", "s1 s2 s1 s4 s5 s4", kWord, kWord); }

}  // namespace

static void BM_InitialTilting(benchmark::State& state) {
  Stratum s = example();
  for (auto _ : state) benchmark::DoNotOptimize(initial_tilting(s));
}
BENCHMARK(BM_InitialTilting)->Unit(benchmark::kMillisecond);

static void BM_EnumerateClass(benchmark::State& state) {
  Stratum s = example();
  Seed seed = initial_seed(s, initial_tilting(s));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(seed));
}
BENCHMARK(BM_EnumerateClass)->Unit(benchmark::kMillisecond);

static void BM_HomBasis(benchmark::State& state) {
  Stratum s = example();
  ClusterTilting t = initial_tilting(s);
  const Module& a = t.summands.front().module;
  const Module& b = t.summands.back().module;
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(a, b));
}
BENCHMARK(BM_HomBasis)->Unit(benchmark::kMicrosecond);

static void BM_CategoricalMutation(benchmark::State& state) {
  Stratum s = example();
  ClusterTilting t = initial_tilting(s);
  for (auto _ : state) benchmark::DoNotOptimize(categorical_mutation(t, 2));
}
BENCHMARK(BM_CategoricalMutation)->Unit(benchmark::kMillisecond);

static void BM_GaussPlus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  Matrix z = random_lower(n, rng) * random_unitriangular(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_plus(z));
}
BENCHMARK(BM_GaussPlus)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_SeedMutation(benchmark::State& state) {
  Stratum s = example();
  Seed seed = initial_seed(s, initial_tilting(s));
  for (auto _ : state) benchmark::DoNotOptimize(mutate(seed, 2));
}
BENCHMARK(BM_SeedMutation)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
