#include <benchmark/benchmark.h>

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "eiskron/kernels/dirichlet_sum.hpp"
#include "eiskron/kernels/divisor_series.hpp"
#include "eiskron/kernels/lattice_sum.hpp"

namespace {

using namespace eiskron::kernels;

// d^3 d'^2 f(d, d') for an arbitrary rational f on (Z/5)^2
mpq_class term(long long d, long long dp) {
  const mpq_class f(static_cast<long>((d * 3 + dp) % 5 + 1), 7);
  mpz_class w = static_cast<long>(d * d * d);
  w *= static_cast<long>(dp * dp);
  return f * w;
}

void BM_DivisorSeriesSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(divisor_series_serial(state.range(0), mpq_class(0), term));
}

void BM_DivisorSeriesOmp(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(divisor_series_omp(state.range(0), mpq_class(0), term));
}

std::vector<std::complex<double>> periodic(int N) {
  std::vector<std::complex<double>> f(N);
  for (int a = 0; a < N; ++a) f[a] = std::polar(1.0, 0.7 * a);
  return f;
}

void BM_DirichletSerial(benchmark::State& state) {
  const auto f = periodic(7);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_partial_sum_serial(f, 3, state.range(0)));
}

void BM_DirichletOmp(benchmark::State& state) {
  const auto f = periodic(7);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_partial_sum_omp(f, 3, state.range(0)));
}

void BM_LatticeSerial(benchmark::State& state) {
  const std::complex<double> tau(0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_class_sums_serial(4, 3, tau, state.range(0)));
}

void BM_LatticeOmp(benchmark::State& state) {
  const std::complex<double> tau(0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_class_sums_omp(4, 3, tau, state.range(0)));
}

}  // namespace

BENCHMARK(BM_DivisorSeriesSerial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DivisorSeriesOmp)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DirichletSerial)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirichletOmp)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LatticeSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeOmp)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
