#include "wbary/euler.hpp"
#include "wbary/oracle.hpp"
#include "wbary/random_instances.hpp"
#include "wbary/series.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace wbary;

// r singular points with distinct small weights, rho = 6 + 1/2.
ValidatedInstance instance_with(std::int64_t r) {
  std::vector<Rational> weights;
  for (std::int64_t i = 0; i < r; ++i) weights.emplace_back(i + 1, 2 * r + 1);
  return validate(ProblemInstance{-3, weights, Rational(13, 2), {}});
}

void BM_Direct(benchmark::State& state) {
  const auto v = instance_with(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_c_direct(v));
}
BENCHMARK(BM_Direct)->DenseRange(0, 12, 4)->Arg(16);

void BM_Strata(benchmark::State& state) {
  const auto v = instance_with(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_c_strata(v));
}
BENCHMARK(BM_Strata)->DenseRange(0, 12, 4)->Arg(16);

void BM_Series(benchmark::State& state) {
  const auto v = instance_with(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chi_c_series(v));
}
BENCHMARK(BM_Series)->DenseRange(0, 12, 4);

void BM_Oracle(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::vector<Rational> listed{Rational(1, 2), Rational(3, 4), Rational(5, 3)};
  const auto space = FiniteWeightedSpace::with_weights(m, listed);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_chi(space, Rational(m, 2)));
}
BENCHMARK(BM_Oracle)->DenseRange(4, 16, 4);

void BM_RandomCorpusAllEngines(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<ValidatedInstance> corpus;
  for (int i = 0; i < 100; ++i) corpus.push_back(validate(random_instance(rng)));
  for (auto _ : state) {
    for (const auto& v : corpus) {
      benchmark::DoNotOptimize(chi_c_direct(v));
      benchmark::DoNotOptimize(chi_c_strata(v));
      benchmark::DoNotOptimize(chi_c_series(v));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_RandomCorpusAllEngines)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
