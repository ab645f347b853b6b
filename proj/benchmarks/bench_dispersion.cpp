#include "benchmark/benchmark.h"
#include "convdisp/dispersion.hpp"
#include "convdisp/fem.hpp"

using namespace convdisp;

namespace {

constexpr double kPi = 3.14159265358979323846;

void closed_form_root(benchmark::State& state) {
  const FlowParams flow{0.6};
  for (auto _ : state) {
    for (int i = 0; i < 1000; ++i) {
      const WaveProbe probe{0.01 + 0.0009 * i, 0.3};
      const auto comps = wave_components(Formulation::Convected, flow, probe);
      benchmark::DoNotOptimize(
          positive_root(scheme_quadratic(Scheme::RT2NC, Formulation::Convected, flow, comps)));
    }
  }
}
BENCHMARK(closed_form_root);

void patch_oracle_root(benchmark::State& state) {
  const FlowParams flow{0.6};
  const Vec2 comps = wave_components(Formulation::Convected, flow, WaveProbe{0.4, 0.3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        positive_root(stencil_oracle(Scheme::RT2NC, Formulation::Convected, flow, comps)));
  }
}
BENCHMARK(patch_oracle_root);

void coefficient_ladder(benchmark::State& state) {
  const FlowParams flow{0.6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        a1_numeric(Scheme::RT1NC, Formulation::HelmholtzReformulated, flow, 0.25 * kPi));
  }
}
BENCHMARK(coefficient_ladder);

void quotient_bisection(benchmark::State& state) {
  const FlowParams flow{0.6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dispersion_quotients(Scheme::P1C, Formulation::Convected, flow, 0.25 * kPi, 0.25));
  }
}
BENCHMARK(quotient_bisection);

}  // namespace

BENCHMARK_MAIN();
