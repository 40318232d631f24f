// Micro benchmarks for the hot paths: per-mode propagator assembly (closed
// form vs matrix exponential), whole-grid spectral evolution in 1d/2d, the
// positivity-preserving splitting, walker simulation, and the end-to-end
// counterexample search.  Inputs are fixed so numbers are comparable run to
// run.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"
#include "diraclab/propagator.hpp"
#include "diraclab/prw.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/trotter.hpp"
#include "diraclab/witness.hpp"

namespace {

using namespace diraclab;

std::vector<Eigen::VectorXd> sample_wavevectors(int d, int count) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  std::vector<Eigen::VectorXd> ks;
  ks.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd k(d);
    for (int mu = 0; mu < d; ++mu) k(mu) = comp(rng);
    ks.push_back(k);
  }
  return ks;
}

void BM_PropagatorClosedForm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const EvolutionParams params{1.0, build_generators(d)};
  const auto ks = sample_wavevectors(d, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const PropagatorMatrix m = propagator(params, ks[i++ % ks.size()], 1.0);
    benchmark::DoNotOptimize(m.M.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PropagatorClosedForm)->Arg(1)->Arg(2)->Arg(3);

void BM_PropagatorExpmOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const EvolutionParams params{1.0, build_generators(d)};
  const auto ks = sample_wavevectors(d, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const PropagatorMatrix m = expm_oracle(params, ks[i++ % ks.size()], 1.0);
    benchmark::DoNotOptimize(m.M.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PropagatorExpmOracle)->Arg(1)->Arg(2)->Arg(3);

void BM_Evolve1d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{1, n, 40.0};
  const EvolutionParams params{1.0, canonical_1d(1)};
  const DensityField p0 = cauchy_initial(grid, 2, 0, Eigen::VectorXd::Zero(1));
  for (auto _ : state) {
    const DensityField pt = evolve(params, p0, 1.0);
    benchmark::DoNotOptimize(pt.values.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Evolve1d)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);

void BM_Evolve2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{2, n, 20.0};
  const EvolutionParams params{1.0, build_generators(2)};
  const DensityField p0 = gaussian_initial(grid, 4, 0, Eigen::VectorXd::Zero(2), 1.0);
  for (auto _ : state) {
    const DensityField pt = evolve(params, p0, 1.0);
    benchmark::DoNotOptimize(pt.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n);
}
BENCHMARK(BM_Evolve2d)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_TrotterEvolve(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int n = 32 * N;  // t/N == dx coupling at L = 16, t = 1
  const GridSpec grid{1, n, 16.0};
  const DensityField p0 = gaussian_initial(grid, 2, 0, Eigen::VectorXd::Zero(1), 1.0);
  const LatticeField lat0 = rebin(p0, n);
  for (auto _ : state) {
    const LatticeField lt = trotter_evolve(lat0, 1.0, N);
    benchmark::DoNotOptimize(lt.plus.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(N) * n);
}
BENCHMARK(BM_TrotterEvolve)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_PrwSimulate(benchmark::State& state) {
  PrwConfig cfg;
  cfg.n_walkers = state.range(0);
  cfg.seed = 42;
  cfg.dt = 1e-3;
  for (auto _ : state) {
    const WalkerEnsemble ens = prw_simulate(cfg, 0.1);  // 100 steps per walker
    benchmark::DoNotOptimize(ens.positions.data());
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_walkers * 100);
}
BENCHMARK(BM_PrwSimulate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_FindCounterexample2d(benchmark::State& state) {
  const GeneratorSet g = build_generators(2);
  const GridSpec grid{2, static_cast<int>(state.range(0)), 20.0};
  for (auto _ : state) {
    const Witness w = find_counterexample(g, 1.0, grid);
    benchmark::DoNotOptimize(w.value);
  }
}
BENCHMARK(BM_FindCounterexample2d)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
