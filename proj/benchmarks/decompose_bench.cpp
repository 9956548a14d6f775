#include <benchmark/benchmark.h>

#include "cliqster/baselines.hpp"
#include "cliqster/decompose.hpp"
#include "cliqster/synth.hpp"

namespace {

using namespace cliqster;

Graph bench_graph(int n) {
  CategoryProfile p{"bench", 2.5, 0.01, 1.0, n, {}};
  return generate(p, 42);
}

void BM_CliqsterDecompose(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = decompose(g);
    benchmark::DoNotOptimize(d.coeffs.mu);
  }
  state.SetComplexityN(state.range(0));
}

void BM_SvdSpectrum(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = svd_spectrum(g);
    benchmark::DoNotOptimize(s);
  }
  state.SetComplexityN(state.range(0));
}

void BM_CliqueEnumeration(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cs = enumerate_maximal_cliques(g);
    benchmark::DoNotOptimize(cs);
  }
}

}  // namespace

BENCHMARK(BM_CliqsterDecompose)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SvdSpectrum)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueEnumeration)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
