#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "markseq/construction.hpp"
#include "markseq/digraph.hpp"
#include "markseq/oracle.hpp"
#include "markseq/realizability.hpp"
#include "markseq/transform.hpp"

namespace {

markseq::KDigraph random_digraph(int n, int k, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, (k + 1) * (k + 2) / 2 - 1);
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int s = pick(rng);
      int a = 0;
      while (s >= k - a + 1) {
        s -= k - a + 1;
        ++a;
      }
      adj[i][j] = a;
      adj[j][i] = s;
    }
  }
  return markseq::KDigraph::from_matrix(n, k, adj);
}

void BM_CheckRealizable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  markseq::MarkSequence seq = compute_marks(random_digraph(n, 2, 7u));
  for (auto _ : state) {
    benchmark::DoNotOptimize(markseq::check_realizable(seq));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CheckRealizable)->Arg(16)->Arg(128)->Arg(1024)->Complexity();

void BM_ComputeMarks(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto d = random_digraph(n, 2, 11u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_marks(d));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ComputeMarks)->Arg(16)->Arg(64)->Arg(256)->Complexity();

void BM_RealizeFlow(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  markseq::MarkSequence seq = compute_marks(random_digraph(n, 2, 23u));
  for (auto _ : state) {
    benchmark::DoNotOptimize(markseq::realize_flow(seq));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RealizeFlow)->Arg(8)->Arg(32)->Arg(96)->Complexity();

void BM_RealizeHh(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  markseq::MarkSequence seq = compute_marks(random_digraph(n, 1, 31u));
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(markseq::realize_hh(seq, markseq::HhVariant::OnesFirst));
    } catch (const markseq::IllDefinedStepError&) {
      state.SkipWithError("reduction step ill-defined for this input");
      return;
    }
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RealizeHh)->Arg(8)->Arg(32)->Arg(96)->Complexity();

void BM_MinimizeArcs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto d = random_digraph(n, 2, 43u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(markseq::minimize_arcs(d));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MinimizeArcs)->Arg(6)->Arg(12)->Arg(24)->Complexity();

void BM_EnumerateDigraphs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    long long count = 0;
    markseq::oracle::enumerate_digraphs(n, k, [&](const markseq::KDigraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateDigraphs)->Args({3, 2})->Args({4, 1})->Args({4, 2});

void BM_CanonicalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto d = random_digraph(n, 2, 59u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(markseq::oracle::canonical_form(d));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
