#include <benchmark/benchmark.h>

#include "nilorb/admissible.hpp"
#include "nilorb/kraft_procesi.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/w2.hpp"

using namespace nilorb;

static void BM_Hasse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hasse(n, Eps::Orthogonal));
}
BENCHMARK(BM_Hasse)->Arg(12)->Arg(18)->Arg(24);

static void BM_ReduceAllPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = enumerate_eps(n, Eps::Symplectic);
  for (auto _ : state) {
    for (const auto& lam : all) {
      for (const auto& eta : minimal_degenerations(lam, Eps::Symplectic)) {
        benchmark::DoNotOptimize(reduce(lam, eta, Eps::Symplectic));
      }
    }
  }
}
BENCHMARK(BM_ReduceAllPairs)->Arg(12)->Arg(20);

static void BM_Normality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = algebra_for(Eps::Orthogonal, n);
  const auto all = enumerate_eps(n, Eps::Orthogonal);
  for (auto _ : state) {
    for (const auto& lam : all) {
      if (!is_very_even(g, lam)) benchmark::DoNotOptimize(is_normal_closure(g, lam));
    }
  }
}
BENCHMARK(BM_Normality)->Arg(13)->Arg(17);

static void BM_VerifyTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_paper_tables(9, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyTables)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_W2Evaluate(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto gens = w2_generators(r);
  const auto pts = sample_off_axis(r, 256, 1);
  for (auto _ : state) {
    for (const auto& p : pts) benchmark::DoNotOptimize(evaluate(gens, p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}
BENCHMARK(BM_W2Evaluate)->Arg(3)->Arg(6)->Arg(10);
BENCHMARK_MAIN();
