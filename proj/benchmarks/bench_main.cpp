#include <benchmark/benchmark.h>

#include "slh/lie_basis.hpp"
#include "slh/moment_analysis.hpp"
#include "slh/pauli_walk.hpp"
#include "slh/stochastic_evolution.hpp"

using namespace slh;

static void BM_LocalGenerator(benchmark::State& state) {
  const auto model = stoch::decoupling_preset(2);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moment::local_generator(model, k));
}
BENCHMARK(BM_LocalGenerator)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_SpectralGap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = stoch::decoupling_preset(n);
  const auto graph = stoch::build_graph(stoch::GraphKind::complete, n);
  const auto generator = moment::global_generator(model, graph, 2, false);
  for (auto _ : state) benchmark::DoNotOptimize(moment::spectral_gap(generator));
}
BENCHMARK(BM_SpectralGap)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_StepperStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = stoch::decoupling_preset(n);
  const stoch::Stepper stepper(model, stoch::build_graph(stoch::GraphKind::complete, n));
  auto rng = stoch::trajectory_rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(stepper.step(1e-3, rng));
}
BENCHMARK(BM_StepperStep)->Arg(2)->Arg(4)->Arg(6);

static void BM_Ctrw(benchmark::State& state) {
  pauli::CtrwConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.T = 5.0;
  cfg.trajectories = 1000;
  cfg.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(pauli::simulate_ctrw(cfg));
}
BENCHMARK(BM_Ctrw)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_QTable(benchmark::State& state) {
  const auto block = pauli::pauli_block_generator(stoch::decoupling_preset(3),
                                                 stoch::build_graph(stoch::GraphKind::complete, 3));
  for (auto _ : state) benchmark::DoNotOptimize(pauli::q_table(block, 0.1));
}
BENCHMARK(BM_QTable)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
