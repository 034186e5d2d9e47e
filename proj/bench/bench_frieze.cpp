// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "frieze/enumeration.hpp"
#include "frieze/ptolemy.hpp"
#include "frieze/triangulation.hpp"

using namespace frieze;

namespace {

BoundarySequence boundary(int which) {
  switch (which) {
    case 0:
      return BoundarySequence({3, 7, 5, 3});
    case 1:
      return BoundarySequence(std::vector<Scalar>(7, 1));
    default:
      return BoundarySequence(std::vector<Scalar>(8, 1));
  }
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto b = boundary(static_cast<int>(state.range(0)));
  const auto d = DomainSpec::positive_integers();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_friezes_serial(b, d));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto b = boundary(static_cast<int>(state.range(0)));
  const auto d = DomainSpec::positive_integers();
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_friezes(b, d));
}

FriezeMap big_frieze(int m) {
  std::vector<VertexPair> fan;
  for (int q = 3; q < m; ++q) fan.push_back({1, q});
  return frieze_from_triangulation(Triangulation(m, fan));
}

void BM_PtolemySerial(benchmark::State& state) {
  const FriezeMap f = big_frieze(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_ptolemy_serial(f));
}

void BM_PtolemyParallel(benchmark::State& state) {
  const FriezeMap f = big_frieze(static_cast<int>(state.range(0)));
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_ptolemy(f));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PtolemySerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PtolemyParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
