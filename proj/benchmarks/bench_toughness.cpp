#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tough/chordal.hpp"
#include "tough/harness.hpp"
#include "tough/toughness.hpp"
#include "tough/ttgraph.hpp"

namespace {

tough::Graph circulant(int n, std::initializer_list<int> jumps) {
  std::vector<tough::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j : jumps) edges.emplace_back(i, (i + j) % n);
  return tough::Graph(n, edges);
}

tough::Graph random_graph(int n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<tough::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return tough::Graph(n, edges);
}

void BM_ToughnessCycle(benchmark::State& state) {
  const auto g = circulant(static_cast<int>(state.range(0)), {1});
  for (auto _ : state) benchmark::DoNotOptimize(tough::toughness(g));
}
BENCHMARK(BM_ToughnessCycle)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_ToughnessCirculant(benchmark::State& state) {
  const auto g = circulant(static_cast<int>(state.range(0)), {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(tough::toughness(g));
}
BENCHMARK(BM_ToughnessCirculant)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_ToughnessRandom(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tough::toughness(g));
}
BENCHMARK(BM_ToughnessRandom)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_MinimallyTough(benchmark::State& state) {
  const auto g = circulant(static_cast<int>(state.range(0)), {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(tough::is_minimally_tough(g));
}
BENCHMARK(BM_MinimallyTough)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_CliqueTree(benchmark::State& state) {
  // A fan: path 1..n-1 plus a universal vertex 0.
  const int n = static_cast<int>(state.range(0));
  std::vector<tough::Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  const tough::Graph g(n, edges);
  for (auto _ : state) benchmark::DoNotOptimize(tough::build_clique_tree(g));
}
BENCHMARK(BM_CliqueTree)->RangeMultiplier(2)->Range(8, 64);

void BM_RecognizeTT(benchmark::State& state) {
  const auto built = tough::tt_from_tree(
      tough::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}}), {0});
  for (auto _ : state) benchmark::DoNotOptimize(tough::recognize_tt(built.graph));
}
BENCHMARK(BM_RecognizeTT);

void BM_SweepMain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tough::run_sweep(tough::SweepKind::main, {n, 1, false, false}));
}
BENCHMARK(BM_SweepMain)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
