#include "benchmark/benchmark.h"
#include "convdisp/fem.hpp"

using namespace convdisp;

namespace {

void assemble_bilinear(benchmark::State& state) {
  const QuadMesh mesh{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_system(Scheme::P1C, mesh, 10.0, FlowParams{0.6}));
  }
  state.SetComplexityN(mesh.cells());
}
BENCHMARK(assemble_bilinear)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oN);

void assemble_edge_mean(benchmark::State& state) {
  const QuadMesh mesh{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_system(Scheme::RT2NC, mesh, 10.0, FlowParams{0.6}));
  }
  state.SetComplexityN(mesh.cells());
}
BENCHMARK(assemble_edge_mean)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oN);

void impedance_rhs(benchmark::State& state) {
  const QuadMesh mesh{64};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_rhs(Scheme::RT2NC, mesh, 10.0, FlowParams{0.6}, 0.3));
  }
}
BENCHMARK(impedance_rhs);

void broken_energy_norm(benchmark::State& state) {
  const QuadMesh mesh{64};
  const auto dofs = interpolate_exact(Scheme::RT1NC, mesh, 8.0, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        energy_norm_error(Scheme::RT1NC, mesh, 10.0, FlowParams{0.6}, 0.3, dofs));
  }
}
BENCHMARK(broken_energy_norm);

}  // namespace
