#include <benchmark/benchmark.h>

#include "ringspec/arborescence.hpp"
#include "ringspec/chebyshev.hpp"
#include "ringspec/ring_digraph.hpp"
#include "ringspec/rootfind.hpp"
#include "ringspec/scan.hpp"

namespace {

using namespace ringspec;

void BM_AberthZ(benchmark::State& state) {
  const IntPolynomial p = z_poly(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aberth_roots(p));
}
BENCHMARK(BM_AberthZ)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CharPolyExact(benchmark::State& state) {
  const IntMatrix l = laplacian(RingDigraph::bidirectional(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(l));
}
BENCHMARK(BM_CharPolyExact)->Arg(12)->Arg(24)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_CharPolyGaps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RingDigraph g = RingDigraph::two_missing(n, n / 3);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPolyGaps)->Arg(12)->Arg(24)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_CofactorCount(benchmark::State& state) {
  const IntMatrix l = laplacian(RingDigraph::two_missing(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(count_by_cofactor(l));
}
BENCHMARK(BM_CofactorCount)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_Scan(benchmark::State& state) {
  ScanOptions opt;
  opt.n_min = 3;
  opt.n_max = static_cast<int>(state.range(0));
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scan_masks(opt));
}
BENCHMARK(BM_Scan)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
