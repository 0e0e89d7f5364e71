#include <benchmark/benchmark.h>

#include <random>

#include "rankdual/axioms.hpp"
#include "rankdual/duality.hpp"
#include "rankdual/structures.hpp"
#include "rankdual/tutte.hpp"
#include "rankdual/verify.hpp"

using namespace rankdual;

namespace {

RankTable random_table(std::size_t n) {
  std::mt19937_64 rng(n * 7919 + 1);
  return random_normalized_table(rng, n, -3, 8);
}

void BM_Dual(benchmark::State& state) {
  const RankTable g = random_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dual)->DenseRange(4, 20, 4);

void BM_Contract(benchmark::State& state) {
  const RankTable g = random_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(contract(g, std::size_t{0}));
}
BENCHMARK(BM_Contract)->DenseRange(4, 20, 4);

void BM_TutteSubset(benchmark::State& state) {
  const RankTable g = random_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_subset(g));
}
BENCHMARK(BM_TutteSubset)->DenseRange(2, 16, 2);

void BM_TutteRecursive(benchmark::State& state) {
  const RankTable g = random_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_recursive(g, PivotRule::lowest));
}
BENCHMARK(BM_TutteRecursive)->DenseRange(2, 12, 2);

void BM_CheckMatroid(benchmark::State& state) {
  std::vector<std::string> labels;
  for (int i = 0; i < state.range(0); ++i) labels.push_back("e" + std::to_string(i));
  const RankTable g = uniform_matroid(labels, labels.size() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_matroid(g));
}
BENCHMARK(BM_CheckMatroid)->DenseRange(4, 12, 4);

void BM_PruningClosure(benchmark::State& state) {
  const RankTable r = pruning_antimatroid(bundled_pruning_tree());
  for (auto _ : state) benchmark::DoNotOptimize(ConvexClosure(r));
}
BENCHMARK(BM_PruningClosure);

void BM_EnumerateGreedoids(benchmark::State& state) {
  const EnumSpec spec{static_cast<std::size_t>(state.range(0)), TableConstraint::greedoid};
  for (auto _ : state) benchmark::DoNotOptimize(count_tables(spec));
}
BENCHMARK(BM_EnumerateGreedoids)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
