#include <benchmark/benchmark.h>

#include "gaugelab/dynamics.hpp"
#include "gaugelab/fft.hpp"
#include "gaugelab/mechanics.hpp"
#include "gaugelab/multipolar.hpp"
#include "gaugelab/random_fields.hpp"
#include "gaugelab/sources.hpp"
#include "gaugelab/spectral_ops.hpp"
#include "gaugelab/trajectories.hpp"

using namespace gaugelab;

namespace {

Grid grid_for(const benchmark::State& state) { return Grid(static_cast<int>(state.range(0)), 1.0, 1.0, 0.01); }

void BM_ForwardInverseFft(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto f = random_scalar_field(g, 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(forward(f)));
}
BENCHMARK(BM_ForwardInverseFft)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_HelmholtzSplit(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto v = random_transverse_field(g, 2, 4) + gradient(random_scalar_field(g, 3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(helmholtz_split(v));
}
BENCHMARK(BM_HelmholtzSplit)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PoissonSolve(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto rho = random_scalar_field(g, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_solve(rho, g.eps0()));
}
BENCHMARK(BM_PoissonSolve)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ChargeDeposit(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto atom = random_atom(4, 3 * g.spacing(), 0.04, 0.2, 0.8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(charge_density(atom, g));
}
BENCHMARK(BM_ChargeDeposit)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PolarizationField(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto atom = random_atom(4, 3 * g.spacing(), 0.04, 0.2, 0.8, 6);
  const auto q = gauss_legendre(32);
  for (auto _ : state) benchmark::DoNotOptimize(polarization_field(atom, g, q));
}
BENCHMARK(BM_PolarizationField)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EvolverStep(benchmark::State& state) {
  const Grid g = grid_for(state);
  const double sigma = 3 * g.spacing();
  const double v = circular_orbit_speed(g, sigma, 0.15);
  Evolver ev(SystemState{ParticleSet({{1, 1836, {}, {}}, {-1, 1, {0.15, 0, 0}, {0, v, 0}}}, sigma),
                         zero_field_state(g), 0.0});
  const double dt = 0.5 * max_stable_dt(g);
  for (auto _ : state) ev.advance(dt);
}
BENCHMARK(BM_EvolverStep)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
