#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "altsum/asymptotics.hpp"
#include "altsum/circle.hpp"
#include "altsum/moments.hpp"
#include "altsum/series.hpp"
#include "altsum/specfun.hpp"

namespace {

void BM_PartitionSeries(benchmark::State& state) {
  const std::size_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(altsum::partition_series(n));
}
BENCHMARK(BM_PartitionSeries)->Arg(200)->Arg(500)->Arg(1000);

void BM_PentagonalOracle(benchmark::State& state) {
  const std::size_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(altsum::pentagonal_partition_numbers(n));
}
BENCHMARK(BM_PentagonalOracle)->Arg(500)->Arg(2000);

void BM_BivariateDistribution(benchmark::State& state) {
  const std::size_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(altsum::bivariate_distribution(n));
}
BENCHMARK(BM_BivariateDistribution)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_MomentSeries(benchmark::State& state) {
  const unsigned m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(altsum::moment_exact_series(m, 200));
}
BENCHMARK(BM_MomentSeries)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Dilog(benchmark::State& state) {
  std::complex<double> z(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(altsum::specfun::dilog(z));
    z *= std::complex<double>(0.9999, 0.0001);  // wander a little
  }
}
BENCHMARK(BM_Dilog);

void BM_IstarQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(altsum::asym::istar_quadrature(1, 2, 1.0));
}
BENCHMARK(BM_IstarQuadrature)->Unit(benchmark::kMillisecond);

void BM_SaddleIntegral(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(altsum::circle::saddle_check(1, 1e4, 1.0, state.range(0)));
}
BENCHMARK(BM_SaddleIntegral)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_LogPochhammerDirect(benchmark::State& state) {
  const double n = 2000;
  const double x = M_PI / std::sqrt(6.0 * n);
  const std::complex<double> q = std::exp(-std::complex<double>(x, x * 3.0));
  for (auto _ : state)
    benchmark::DoNotOptimize(altsum::asym::log_pochhammer_direct(1, 1, {1, 0}, q));
}
BENCHMARK(BM_LogPochhammerDirect);

}  // namespace

BENCHMARK_MAIN();
