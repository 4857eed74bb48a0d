// Microbenchmarks for the hot paths: complex log-gamma, the polynomial in both
// evaluation styles, single wavefunction samples, and a full Gram matrix.
#include <benchmark/benchmark.h>

#include <relosc/cdhahn.hpp>
#include <relosc/oscillator.hpp>
#include <relosc/special_functions.hpp>
#include <relosc/verification.hpp>

using relosc::CdhParams;
using relosc::Complex;
using relosc::DimensionlessParams;

static void BM_LogGamma(benchmark::State& state) {
  Complex z(0.37, 4.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relosc::log_gamma(z));
    z += Complex(1e-12, 1e-12);  // defeat value caching without moving the input
  }
}
BENCHMARK(BM_LogGamma);

static void BM_PolynomialSum(benchmark::State& state) {
  const CdhParams p{Complex(1.3, 0.0), Complex(45.0, 0.0), Complex(0.5, 0.0)};
  const int n = static_cast<int>(state.range(0));
  double x = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(relosc::cdh_sum(n, Complex(x * x, 0.0), p));
    x += 1e-12;
  }
}
BENCHMARK(BM_PolynomialSum)->Arg(4)->Arg(12);

static void BM_PolynomialRecurrence(benchmark::State& state) {
  const CdhParams p{Complex(1.3, 0.0), Complex(45.0, 0.0), Complex(0.5, 0.0)};
  const int n = static_cast<int>(state.range(0));
  double x = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(relosc::cdh_recurrence(n, Complex(x * x, 0.0), p));
    x += 1e-12;
  }
}
BENCHMARK(BM_PolynomialRecurrence)->Arg(4)->Arg(12);

static void BM_WavefunctionSample(benchmark::State& state) {
  const auto d = DimensionlessParams::make(1.0, 0.0);
  const relosc::RadialWavefunction psi(d, {3, 1});
  double rho = 2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(Complex(rho, 0.0)));
    rho += 1e-12;
  }
}
BENCHMARK(BM_WavefunctionSample);

static void BM_GramMatrix(benchmark::State& state) {
  const auto d = DimensionlessParams::make(0.25, 0.25);
  relosc::QuadratureSpec spec;
  spec.scheme = relosc::QuadratureScheme::FixedComposite;
  spec.node_count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relosc::orthonormality_matrix(d, 2, 4, spec));
  }
}
BENCHMARK(BM_GramMatrix)->Arg(96)->Arg(192);

BENCHMARK_MAIN();
