#include <benchmark/benchmark.h>

#include "birkhoff/gkm.hpp"

using namespace birkhoff;

namespace {

AffineWeylGroup group(RootType t, int rank) { return AffineWeylGroup(build_cartan(t, rank)); }

void BM_EnumerateMinReps(benchmark::State& state) {
  const auto g = group(RootType::A, 2);
  for (auto _ : state) benchmark::DoNotOptimize(g.enumerate_min_reps(ParabolicSubset::empty(), state.range(0)));
}
BENCHMARK(BM_EnumerateMinReps)->Arg(4)->Arg(8)->Arg(12);

void BM_BruhatLeqAllPairs(benchmark::State& state) {
  const auto g = group(RootType::C, 2);
  const auto reps = g.enumerate_min_reps(ParabolicSubset::empty(), state.range(0));
  for (auto _ : state) {
    int count = 0;
    for (const auto& a : reps)
      for (const auto& b : reps) count += bruhat_leq(g, a, b, ParabolicSubset::empty()).leq;
    benchmark::DoNotOptimize(count);
  }
  state.counters["pairs"] = static_cast<double>(reps.size() * reps.size());
}
BENCHMARK(BM_BruhatLeqAllPairs)->Arg(3)->Arg(5);

void BM_LowerIdeal(benchmark::State& state) {
  const auto g = group(RootType::A, 3);
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(i % 4);
  const auto gen = g.from_word(w);
  for (auto _ : state) benchmark::DoNotOptimize(lower_ideal(g, {gen}, ParabolicSubset::empty()));
}
BENCHMARK(BM_LowerIdeal)->Arg(4)->Arg(8);

void BM_GkmBuildAndCheck(benchmark::State& state) {
  const auto g = group(RootType::A, 2);
  const auto s = ParabolicSubset::finite(2);
  const auto vertices = g.enumerate_min_reps(s, 5);
  for (auto _ : state) {
    const auto graph = build_gkm_graph(g, vertices, s, static_cast<int>(state.range(0)), 5);
    benchmark::DoNotOptimize(check_membership(symmetrized_class(graph, {0, 1, 0}, 2), graph));
  }
}
BENCHMARK(BM_GkmBuildAndCheck)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
