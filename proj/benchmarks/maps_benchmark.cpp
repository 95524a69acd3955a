#include <benchmark/benchmark.h>

#include "schlicht/conformal.hpp"
#include "schlicht/domain.hpp"
#include "schlicht/radius_lab.hpp"

using namespace schlicht;

static void BM_InverseKoebe(benchmark::State& state) {
  const UnitRotation u(Complex(-1.0, 0.0));
  Complex w(0.3, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse_koebe(u, w));
    w += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_InverseKoebe);

static void BM_TwoSlitMap(benchmark::State& state) {
  const TwoSlitParams params = TwoSlitParams::make(0.5, 1.0 / 3.0, kPi / 2.0);
  const Complex z(0.4, -0.3);
  for (auto _ : state) benchmark::DoNotOptimize(two_slit_map(params, z));
}
BENCHMARK(BM_TwoSlitMap);

static void BM_TwoSlitParamsMake(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(TwoSlitParams::make(0.5, 1.0 / 3.0, kPi / 2.0));
}
BENCHMARK(BM_TwoSlitParamsMake)->Unit(benchmark::kMillisecond);

static void BM_TwoSlitInverse(benchmark::State& state) {
  const TwoSlitParams params = TwoSlitParams::make(0.5, 1.0 / 3.0, kPi / 2.0);
  // interior point and one close to the curve slit tip
  const Complex w = state.range(0) == 0 ? two_slit_map(params, Complex(0.3, 0.5)) : params.anchor * (1.0 - 1e-6);
  for (auto _ : state) benchmark::DoNotOptimize(two_slit_inverse(params, w));
}
BENCHMARK(BM_TwoSlitInverse)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_LargestDiskOmegaP(benchmark::State& state) {
  const Domain d = SlitDiskDomain::omega_p(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(largest_disk(d));
}
BENCHMARK(BM_LargestDiskOmegaP)->Unit(benchmark::kMillisecond);

static void BM_LargestDiskTwoSlit(benchmark::State& state) {
  const Domain d = SlitDiskDomain::two_slit(TwoSlitParams::make(0.5, 1.0 / 3.0, kPi / 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(largest_disk(d));
}
BENCHMARK(BM_LargestDiskTwoSlit)->Unit(benchmark::kMillisecond);

static void BM_BlochSeminorm(benchmark::State& state) {
  const FunctionHandle f = two_pole_rational(0.5, Complex(0.0, 1.0 / 3.0));
  GridSpec grid;
  grid.radial_count = static_cast<int>(state.range(0));
  grid.angular_count = 2 * grid.radial_count;
  for (auto _ : state) benchmark::DoNotOptimize(bloch_seminorm(f, grid));
}
BENCHMARK(BM_BlochSeminorm)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_TwoPoleReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(two_pole_report(0.5, Complex(0.0, 1.0 / 3.0), 1e3));
}
BENCHMARK(BM_TwoPoleReport)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
