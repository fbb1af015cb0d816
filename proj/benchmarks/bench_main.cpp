#include <benchmark/benchmark.h>

#include <random>

#include "quadent/builtin_teleport.hpp"
#include "quadent/clique.hpp"
#include "quadent/densecode.hpp"
#include "quadent/entanglement.hpp"
#include "quadent/suite.hpp"

using namespace quadent;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b);
  return g;
}

void BM_MaxClique(benchmark::State& state) {
  auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.7, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_size(g));
}
BENCHMARK(BM_MaxClique)->Arg(16)->Arg(32)->Arg(64);

void BM_Capacity(benchmark::State& state) {
  static const char* names[] = {"GHZ4", "Omega", "Q5"};
  auto s = make_state(names[state.range(0)]);
  const std::string dc = "DC" + std::to_string(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(capacity(s, dc).max_orthogonal);
  state.SetLabel(std::string(names[state.range(0)]) + " " + dc);
}
BENCHMARK(BM_Capacity)->ArgsProduct({{0, 1, 2}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_RunScenario(benchmark::State& state) {
  static const char* ids[] = {"ghz_1q_4p", "omega_2q_omega16", "w_3q_equal"};
  auto s = builtin_teleport(ids[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s).worst_fidelity);
  state.SetLabel(ids[state.range(0)]);
}
BENCHMARK(BM_RunScenario)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  auto s = make_state("Q5");
  for (auto _ : state) benchmark::DoNotOptimize(profile(s).max_purity);
}
BENCHMARK(BM_Profile)->Unit(benchmark::kMicrosecond);

void BM_PaperSuite(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_paper_suite({}, threads).claims.size());
}
BENCHMARK(BM_PaperSuite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
