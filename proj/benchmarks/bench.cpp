#include <benchmark/benchmark.h>

#include <vector>

#include "kgbound/model.hpp"
#include "kgbound/oracle.hpp"
#include "kgbound/specfun.hpp"
#include "kgbound/spectrum.hpp"
#include "kgbound/wavefunction.hpp"

using namespace kgbound;

static void BM_LnGamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_gamma(x));
    x = x < 90.0 ? x + 1e-3 : 0.3;  // keep the argument moving
  }
}
BENCHMARK(BM_LnGamma);

static void BM_JacobiP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobi_p(n, 1.9078, 0.9964, 0.37));
}
BENCHMARK(BM_JacobiP)->Arg(4)->Arg(16)->Arg(64);

static void BM_Residual(benchmark::State& state) {
  const ModelParams p = reference_params(0.05);
  const StateIndex st{0, 0, Convention::paper_table};
  double E = -0.9954;
  for (auto _ : state) {
    benchmark::DoNotOptimize(residual(p, st, E));
    E = E < -0.5 ? E + 1e-6 : -0.9954;
  }
}
BENCHMARK(BM_Residual);

static void BM_SolveLevel(benchmark::State& state) {
  const ModelParams p = reference_params(0.05);
  const StateIndex st{0, 0, Convention::paper_table};
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_level(p, st, Branch::negative_N));
}
BENCHMARK(BM_SolveLevel);

static void BM_FullTable(benchmark::State& state) {
  const int nr[8] = {0, 1, 0, 1, 0, 2, 1, 0};
  const int ll[8] = {0, 0, 1, 1, 2, 1, 2, 3};
  for (auto _ : state) {
    for (double delta : {0.05, 0.10, 0.15, 0.20}) {
      const ModelParams p = reference_params(delta);
      for (int si = 0; si < 8; ++si) {
        const StateIndex st{nr[si], ll[si], Convention::paper_table};
        benchmark::DoNotOptimize(solve_table_level(p, st));
      }
    }
  }
}
BENCHMARK(BM_FullTable)->Unit(benchmark::kMillisecond);

static void BM_SturmEigenvalue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double h = 1.0 / (n + 1);
  const std::vector<double> diag(n, 2.0 / (h * h));
  const std::vector<double> off(n - 1, -1.0 / (h * h));
  for (auto _ : state)
    benchmark::DoNotOptimize(tridiag_eigenvalue(diag, off, 0));
}
BENCHMARK(BM_SturmEigenvalue)->Arg(1000)->Arg(4000)->Arg(16000);

static void BM_OracleSolve(benchmark::State& state) {
  const ModelParams p = reference_params(0.05);
  GridSpec grid;
  grid.n_points = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(self_consistent_solve(p, 1, 0, 0.05, grid));
}
BENCHMARK(BM_OracleSolve)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_EvalChi(benchmark::State& state) {
  const ModelParams p = reference_params(0.15);
  const StateIndex st{2, 0, Convention::paper_table};
  const EnergyLevel lvl = solve_table_level(p, st);
  const RadialWavefunction wf = build_wavefunction(p, lvl, st);
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_chi(wf, r));
    r = r < 40.0 ? r + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_EvalChi);

static void BM_Normalization(benchmark::State& state) {
  const ModelParams p = reference_params(0.15);
  const StateIndex st{1, 0, Convention::paper_table};
  const EnergyLevel lvl = solve_table_level(p, st);
  const RadialWavefunction wf = build_wavefunction(p, lvl, st);
  for (auto _ : state) benchmark::DoNotOptimize(normalization_check(wf));
}
BENCHMARK(BM_Normalization)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
