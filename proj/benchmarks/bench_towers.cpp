#include "hominduce/analysis.hpp"
#include "hominduce/instances.hpp"

#include <benchmark/benchmark.h>

using namespace hominduce;

namespace {

const HomotopyData& interval2() {
  static const HomotopyData inst = gen_interval(catalogue_dga("exterior:2"));
  return inst;
}

const HomotopyData& perturbed() {
  static const HomotopyData inst = gen_perturbed_hA(gen_interval(catalogue_dga("exterior:1")), 1);
  return inst;
}

}  // namespace

static void BM_TransferTower(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ht_tower(perturbed(), N));
}
BENCHMARK(BM_TransferTower)->DenseRange(3, 6);

static void BM_SCTower(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hmi_tower_sc(interval2(), 2, 3, N));
}
BENCHMARK(BM_SCTower)->DenseRange(3, 6);

/** Defect of an already built tower, arity by arity. */
static void BM_Defect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AInftyTower t = hmi_tower_sc(interval2(), 2, 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(a_infinity_defect(t.m, n));
}
BENCHMARK(BM_Defect)->DenseRange(3, 6);

static void BM_SymbolicM4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hmi_m4(interval2(), 2, 3));
}
BENCHMARK(BM_SymbolicM4);

BENCHMARK_MAIN();
