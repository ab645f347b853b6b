#include <complex>
#include <random>

#include "benchmark/benchmark.h"
#include "convdisp/banded.hpp"
#include "convdisp/fem.hpp"

using namespace convdisp;

namespace {

BandedComplexMatrix random_band(int n, int kl, int ku) {
  BandedComplexMatrix a(n, kl, ku);
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int j = 0; j < n; ++j)
    for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i)
      a.at(i, j) = {u(rng) + (i == j ? 10.0 : 0.0), u(rng)};
  return a;
}

void banded_factorization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int band = static_cast<int>(state.range(1));
  for (auto _ : state) {
    state.PauseTiming();
    auto a = random_band(n, band, band);
    state.ResumeTiming();
    const BandedLU lu(std::move(a));
    benchmark::DoNotOptimize(lu.pivots());
  }
}
BENCHMARK(banded_factorization)->Args({1000, 33})->Args({4000, 65})->Args({8000, 129});

void banded_substitution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int band = static_cast<int>(state.range(1));
  const BandedLU lu(random_band(n, band, band));
  const std::vector<Complex> rhs(n, Complex(1.0, -1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lu.solve(rhs));
  }
}
BENCHMARK(banded_substitution)->Args({4000, 65})->Args({8000, 129});

void solver_end_to_end(benchmark::State& state) {
  const QuadMesh mesh{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    const ConvectedSolver solver(Scheme::RT1NC, mesh, 10.0, FlowParams{0.6});
    benchmark::DoNotOptimize(solver.solve_energy(0.3));
  }
}
BENCHMARK(solver_end_to_end)->Arg(32)->Arg(64);

}  // namespace
