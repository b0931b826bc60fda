#include <benchmark/benchmark.h>

#include "sgmc/functionals.hpp"
#include "sgmc/solver.hpp"

using namespace sgmc;

namespace {

SimConfig config_for(double eps) {
  SimConfig cfg;
  cfg.epsilon = eps;
  cfg.t_end = 1.0;
  cfg.g = Nonlinearity::sine(1.0);
  cfg.psi = InitialCondition::constant(0.5);
  cfg.master_seed = 1;
  return cfg;
}

void TransformRoundTrip(benchmark::State& state) {
  const int m = int(state.range(0));
  SpectralTransform tr(m, grid_size_for(m));
  SpectralField f(m);
  for (int n = 1; n <= m; ++n) f[n] = 1.0 / n;
  GridField g(tr.grid_size());
  for (auto _ : state) {
    tr.synthesize(f, g);
    tr.analyze(g, f);
    benchmark::DoNotOptimize(f.coeffs.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(TransformRoundTrip)->Arg(20)->Arg(80)->Arg(256);

void MollifiedStep(benchmark::State& state) {
  const double eps = 2.0 / double(state.range(0));
  SimConfig cfg = config_for(eps);
  Workspace ws(cfg);
  SpectralField u = ws.sample_initial(cfg.psi);
  RngStream stream{1, 0, 0};
  for (auto _ : state) {
    const BrownianIncrements inc =
        sample_increments(stream, ws.mode_cutoff(), ws.dt());
    ws.make_noise(inc);
    u = step_mollified(u, ws);
    benchmark::DoNotOptimize(u.coeffs.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(MollifiedStep)->Arg(10)->Arg(20)->Arg(40);

void ConvolutionAndBetaStep(benchmark::State& state) {
  const double eps = 2.0 / double(state.range(0));
  SimConfig cfg = config_for(eps);
  cfg.g = Nonlinearity::zero();
  cfg.psi = InitialCondition::constant(0.0);
  Workspace ws(cfg);
  SpectralField x(ws.mode_cutoff());
  BetaState beta(2, 9);
  GridField xg(ws.grid_size());
  RngStream stream{1, 0, 0};
  for (auto _ : state) {
    const BrownianIncrements inc =
        sample_increments(stream, ws.mode_cutoff(), ws.dt());
    ws.make_noise(inc);
    ws.transform().synthesize(x, xg);
    beta_step(beta, xg, ws);
    evolve_convolution_step(x, ws);
    benchmark::DoNotOptimize(beta.values.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(ConvolutionAndBetaStep)->Arg(10)->Arg(20)->Arg(40);

void PhiloxIncrements(benchmark::State& state) {
  RngStream stream{1, 0, 0};
  for (auto _ : state) {
    const BrownianIncrements inc = sample_increments(stream, 80, 1e-3);
    benchmark::DoNotOptimize(inc.dw.data());
  }
  state.SetItemsProcessed(state.iterations() * 80);
}
BENCHMARK(PhiloxIncrements);

}  // namespace

BENCHMARK_MAIN();
