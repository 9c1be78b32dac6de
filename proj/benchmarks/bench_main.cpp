#include <benchmark/benchmark.h>

#include "resint/appendix.hpp"
#include "resint/groebner.hpp"
#include "resint/instance.hpp"
#include "resint/sagbi.hpp"

namespace {

using namespace resint;

// Groebner basis of the residual ideal in grevlex.
void BM_Buchberger(benchmark::State& state) {
  auto inst = build_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Field::prime());
  auto ideal = inst.ideal();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_Buchberger)->Args({3, 2})->Args({4, 2})->Args({3, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_RadicalWitness(benchmark::State& state) {
  auto inst = build_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Field::prime());
  for (auto _ : state) benchmark::DoNotOptimize(verify_ara_witness(inst));
}
BENCHMARK(BM_RadicalWitness)->Args({3, 2})->Args({4, 2})->Args({3, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_ToricKernel(benchmark::State& state) {
  auto inst = build_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(toric_kernel(inst));
}
BENCHMARK(BM_ToricKernel)->Args({4, 2})->Args({5, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_TransBasis(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_transcendence_basis(m, n));
}
BENCHMARK(BM_TransBasis)->Args({4, 2})->Args({6, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
