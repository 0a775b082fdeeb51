#include <benchmark/benchmark.h>

#include "satake/kernels.hpp"
#include "satake/models.hpp"

namespace {

const satake::LieAlgebra& algebra(int which) {
  static const satake::LieAlgebra f4 = satake::build_model("f4m52").lie;
  static const satake::LieAlgebra e6 = satake::build_model("e6m14").lie;
  return which == 0 ? f4 : e6;
}

void BM_KillingSerial(benchmark::State& state) {
  const auto& l = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(satake::kernels::killing_serial(l));
}

void BM_KillingParallel(benchmark::State& state) {
  const auto& l = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(satake::kernels::killing_parallel(l));
}

void BM_JacobiSerial(benchmark::State& state) {
  const auto& l = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(satake::kernels::jacobi_serial(l));
}

void BM_JacobiParallel(benchmark::State& state) {
  const auto& l = algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(satake::kernels::jacobi_parallel(l));
}

}  // namespace

BENCHMARK(BM_KillingSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KillingParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
