#include <benchmark/benchmark.h>

#include "cascade/engine.hpp"
#include "cascade/network.hpp"

using namespace cascade;

static void BM_GenerateEr(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_er(n, 0.9, seed++));
}
BENCHMARK(BM_GenerateEr)->Arg(10)->Arg(100)->Arg(400);

static void BM_Centrality(benchmark::State& state) {
  const auto net = generate_er(static_cast<std::size_t>(state.range(0)), 0.1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvector_centrality(net, {}));
}
BENCHMARK(BM_Centrality)->Arg(100)->Arg(1000);

static void BM_Step(benchmark::State& state) {
  ModelParams p;
  p.p_l = 0.1 * static_cast<double>(state.range(0));
  Simulation sim(p, 11);
  for (auto _ : state) benchmark::DoNotOptimize(sim.advance());
}
BENCHMARK(BM_Step)->Arg(1)->Arg(10);

static void BM_Run(benchmark::State& state) {
  ModelParams p;
  p.T = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(p, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Run)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
