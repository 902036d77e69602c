#include <benchmark/benchmark.h>

#include "polecat/pbw.hpp"
#include "polecat/rep.hpp"
#include "polecat/tl.hpp"

using namespace polecat;

namespace {

const HWord kWord{HGen::k, HGen::e, HGen::f, HGen::kp};

// Coproduct path.  The per-letter cache is warm after the first iteration,
// so this mostly measures sparse products.
void BM_RhoCoproduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rho_n(kWord, n));
}
BENCHMARK(BM_RhoCoproduct)->DenseRange(1, 6);

void BM_RhoDiagram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rho_n_diagram(kWord, n));
}
BENCHMARK(BM_RhoDiagram)->DenseRange(1, 4);

void BM_Kauffman(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  const TLTerm d = tl_random(3, 3, c, 7);
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_normalize(d));
}
BENCHMARK(BM_Kauffman)->DenseRange(0, 8, 2);

void BM_PBW(benchmark::State& state) {
  HWord w;
  for (int i = 0; i < state.range(0); ++i) {
    w.push_back(HGen::e);
    w.push_back(HGen::f);
  }
  for (auto _ : state) benchmark::DoNotOptimize(pbw_normalize(HElement(w)));
}
BENCHMARK(BM_PBW)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
