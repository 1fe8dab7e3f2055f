#include <benchmark/benchmark.h>

#include "geomr/tropical.hpp"

using namespace geomr;

namespace {

void BM_GeomR(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PointSampler ps(1);
  auto xs = ps.positive_product(n, {n / 2, n - n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(geom_R(xs[0], xs[1]));
}
BENCHMARK(BM_GeomR)->DenseRange(3, 6);

void BM_LoopMatrixProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PointSampler ps(2);
  auto xs = ps.positive_product(n, {1, n - 1});
  for (auto _ : state) benchmark::DoNotOptimize(g_of(xs));
}
BENCHMARK(BM_LoopMatrixProduct)->DenseRange(3, 6);

void BM_GeomEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PointSampler ps(3);
  auto xs = ps.positive_product(n, {2, n - 2});
  for (auto _ : state) benchmark::DoNotOptimize(geom_E(xs[0], xs[1]));
}
BENCHMARK(BM_GeomEnergy)->DenseRange(4, 6);

void BM_TropR(benchmark::State& state) {
  KRectangle a = make_krect(4, 1, {2, 2, 6}, 7);
  KRectangle b = make_krect(4, 2, {3, 4, 2, 2}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(trop_R(a, b));
}
BENCHMARK(BM_TropR);

void BM_CombROracle(benchmark::State& state) {
  Tableau T{4, {{1, 1, 3, 3, 3, 3, 4}}};
  Tableau U{4, {{1, 1, 1, 2, 3}, {2, 2, 4, 4, 4}}};
  for (auto _ : state) benchmark::DoNotOptimize(comb_R_oracle(T, U));
}
BENCHMARK(BM_CombROracle);

}  // namespace
BENCHMARK_MAIN();
