#include <benchmark/benchmark.h>

#include "cubforge/arithmetic.hpp"
#include "cubforge/complex_x.hpp"
#include "cubforge/homology.hpp"
#include "cubforge/morse.hpp"
#include "cubforge/projective.hpp"
#include "cubforge/random_c4.hpp"
#include "cubforge/search.hpp"
#include "cubforge/sizeable.hpp"

using namespace cubforge;

namespace {

const Graph& pg3() {
  static Graph g = pg_incidence(3);
  return g;
}

const Graph& arith9() {
  static Graph g = arithmetic_graph(arithmetic_example_9());
  return g;
}

const XSpec& spec9() {
  static XSpec s = XSpec::from_tagged(arith9(), arith9(), arith9());
  return s;
}

const ProductComplex& x9() {
  static ProductComplex x = build_x(spec9());
  return x;
}

}  // namespace

static void BM_FindFourCycle(benchmark::State& state) {
  const Graph& g = pg3();
  for (auto _ : state) benchmark::DoNotOptimize(g.find_four_cycle());
}

static void BM_VerifySizeable(benchmark::State& state) {
  const Graph& g = arith9();
  auto p = SizeablePartition::from_tags(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sizeable(g, p).verdict);
}

static void BM_BipartitionSearch(benchmark::State& state) {
  SearchOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = search_bipartitions(arith9(), opts);
    benchmark::DoNotOptimize(r.hits.size());
  }
}

static void BM_Refute23(benchmark::State& state) {
  SearchOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(refute_23(opts).partitions_found);
}

static void BM_VertexLinkHomology(benchmark::State& state) {
  const auto& x = x9();
  const auto v = x.vertices().front();
  for (auto _ : state) {
    auto h = reduced_homology(x.vertex_link(v));
    benchmark::DoNotOptimize(h.rank[2]);
  }
}

static void BM_AscendingLinkHomology(benchmark::State& state) {
  const auto& x = x9();
  auto os = orient_k(spec9());
  const auto v = x.vertices().front();
  for (auto _ : state) {
    auto h = reduced_homology(ascending_link(x, os, v));
    benchmark::DoNotOptimize(h.rank[2]);
  }
}

static void BM_EulerDirect(benchmark::State& state) {
  const auto& x = x9();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(x.euler_direct(threads));
}

static void BM_MonteCarloC4(benchmark::State& state) {
  for (auto _ : state) {
    auto r = monte_carlo_c4(4, 10000, 271828, 1);
    benchmark::DoNotOptimize(r.mean);
  }
}

BENCHMARK(BM_FindFourCycle);
BENCHMARK(BM_VerifySizeable);
BENCHMARK(BM_BipartitionSearch)->Arg(1)->Arg(4);
BENCHMARK(BM_Refute23);
BENCHMARK(BM_VertexLinkHomology);
BENCHMARK(BM_AscendingLinkHomology);
BENCHMARK(BM_EulerDirect)->Arg(1)->Arg(4);
BENCHMARK(BM_MonteCarloC4);

BENCHMARK_MAIN();
