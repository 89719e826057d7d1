#include <benchmark/benchmark.h>

#include "pframe/configs.hpp"
#include "pframe/gale.hpp"
#include "pframe/linalg.hpp"
#include "pframe/rng.hpp"

using namespace pframe;

static void SymEigen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 eng = stream_engine(1, 0);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = gaussian(eng);
      s(i, j) = v;
      s(j, i) = v;
    }
  for (auto _ : state) {
    auto eig = sym_eigen(s);
    benchmark::DoNotOptimize(eig.eigenvalues.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SymEigen)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void GaleDualBuild(benchmark::State& state) {
  const std::size_t d = 6;
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 eng = stream_engine(2, 0);
  const Configuration x = random_configuration(d, n, eng);
  const GramMatrix a = gram(x);
  for (auto _ : state) {
    GaleDual g = gale_dual(a, d);
    benchmark::DoNotOptimize(g.weights.data());
  }
}
BENCHMARK(GaleDualBuild)->Arg(12)->Arg(24)->Arg(48);

BENCHMARK_MAIN();
