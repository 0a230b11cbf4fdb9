#include <sl2w/genfun.hpp>
#include <sl2w/graphs.hpp>
#include <sl2w/sl2rep.hpp>

#include <benchmark/benchmark.h>

using namespace sl2w;

// Cold-cache reduction of the pairwise crossing shares: the backbone of the
// x<->y transition. Dominated by the epsilon-vertex resolution.
static void BM_NormalFormCrossing(benchmark::State& state) {
  int m = int(state.range(0));
  for (auto _ : state) {
    RewriteEngine engine;
    benchmark::DoNotOptimize(engine.normal_form(all_crossing_share(m)));
  }
}
BENCHMARK(BM_NormalFormCrossing)->DenseRange(3, 7);

// Complete-graph diagram on one strand: arch-heavy reduction path.
static void BM_NormalFormCompleteGraph(benchmark::State& state) {
  int m = int(state.range(0));
  for (auto _ : state) {
    RewriteEngine engine;
    benchmark::DoNotOptimize(engine.wsl2_diagram(complete_graph_diagram(m)));
  }
}
BENCHMARK(BM_NormalFormCompleteGraph)->DenseRange(3, 6);

// Representation-oracle evaluation with interpolation.
static void BM_OracleDiagram(benchmark::State& state) {
  int m = int(state.range(0));
  ChordDiagram d = complete_graph_diagram(m);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_wsl2_diagram(d, m));
}
BENCHMARK(BM_OracleDiagram)->DenseRange(3, 5);

// Diagram enumeration with rotation dedup.
static void BM_EnumerateDiagrams(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(n));
}
BENCHMARK(BM_EnumerateDiagrams)->DenseRange(4, 6);

// Full graph pipeline: realize, reduce, decompose into residues.
static void BM_GraphSeries(benchmark::State& state) {
  for (auto _ : state) {
    RewriteEngine engine;
    ShareSpace space(engine);
    benchmark::DoNotOptimize(graph_rseries(space, bull_graph()));
  }
}
BENCHMARK(BM_GraphSeries);

BENCHMARK_MAIN();
