#include <benchmark/benchmark.h>

#include "invspec/bound_states.hpp"
#include "invspec/marchenko.hpp"
#include "invspec/scattering.hpp"

using namespace invspec;

namespace {

Spectrum bench_spectrum(int n) {
  std::vector<double> kappas;
  for (int i = n; i >= 1; --i) kappas.push_back(0.5 * i + 0.1 * (i % 3));
  return Spectrum::from_kappas(kappas);
}

void BM_PotentialPoint(benchmark::State& state) {
  const Spectrum s = bench_spectrum(static_cast<int>(state.range(0)));
  const NormConstants c = norm_constants(s);
  const PrecisionPolicy policy = PrecisionPolicy::native_auto();
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential(s, c, x, policy));
    x += 1e-6;
  }
}
BENCHMARK(BM_PotentialPoint)->Arg(1)->Arg(4)->Arg(8);

void BM_PotentialExtended(benchmark::State& state) {
  const Spectrum s = bench_spectrum(4);
  const NormConstants c = norm_constants(s);
  const PrecisionPolicy policy =
      PrecisionPolicy::extended(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(potential(s, c, -3.0, policy));
}
BENCHMARK(BM_PotentialExtended)->Arg(128)->Arg(256)->Arg(512);

void BM_BoundStates(benchmark::State& state) {
  const Spectrum s = bench_spectrum(static_cast<int>(state.range(0)));
  const NormConstants c = norm_constants(s);
  const Grid grid(-8, 8, 801);
  for (auto _ : state)
    benchmark::DoNotOptimize(bound_states(s, c, grid, PrecisionPolicy::native_auto()));
}
BENCHMARK(BM_BoundStates)->Arg(1)->Arg(4)->Arg(8);

void BM_ScatteringState(benchmark::State& state) {
  const Spectrum s = bench_spectrum(4);
  const NormConstants c = norm_constants(s);
  const Grid grid(-8, 8, 801);
  const BoundStateSet states = bound_states(s, c, grid, PrecisionPolicy::native_auto());
  for (auto _ : state)
    benchmark::DoNotOptimize(scattering_state(s, states, 5.0));
}
BENCHMARK(BM_ScatteringState);

}  // namespace

BENCHMARK_MAIN();
