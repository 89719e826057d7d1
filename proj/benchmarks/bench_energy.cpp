#include <benchmark/benchmark.h>

#include "pframe/bounds.hpp"
#include "pframe/configs.hpp"
#include "pframe/energies.hpp"
#include "pframe/optimizer.hpp"
#include "pframe/rng.hpp"

using namespace pframe;

static void EnergyEval(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 eng = stream_engine(3, 0);
  const GramMatrix a = gram(random_configuration(4, n, eng));
  const Potential f = Potential::pframe(1.3);
  for (auto _ : state) {
    auto report = energy(a, f);
    benchmark::DoNotOptimize(report.value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(EnergyEval)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void EnergyGradientEval(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 eng = stream_engine(4, 0);
  const Configuration x = random_configuration(4, n, eng);
  const Potential f = Potential::pframe(1.3, 1e-3);
  for (auto _ : state) {
    Matrix g = energy_gradient(x, f);
    benchmark::DoNotOptimize(g.data().data());
  }
}
BENCHMARK(EnergyGradientEval)->Arg(16)->Arg(64)->Arg(128);

static void MStarSolve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto sol = mstar(1.0 / 3.0, 1.3, n);
    benchmark::DoNotOptimize(sol.value);
  }
}
BENCHMARK(MStarSolve)->Arg(8)->Arg(16)->Arg(32);

static void MinimizeSmall(benchmark::State& state) {
  OptimizerOptions opts;
  opts.restarts = 4;
  for (auto _ : state) {
    auto run = minimize_energy(3, 4, Potential::pframe(1.0), opts);
    benchmark::DoNotOptimize(run.energy);
  }
}
BENCHMARK(MinimizeSmall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
