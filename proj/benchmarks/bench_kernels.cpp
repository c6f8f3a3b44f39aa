#include "helmlayer/kernels.hpp"
#include "helmlayer/solver.hpp"
#include "helmlayer/verify.hpp"

#include <benchmark/benchmark.h>

using namespace helmlayer;

namespace {

ProblemSpec example4() {
  ProblemSpec spec;
  spec.n = 3;
  spec.mode = Mode::Circular;
  spec.bc = Problem::DirichletNeumann;
  spec.kappa = 1;
  spec.a = 1;
  spec.P = {PolyTerm{1, MultiIndex{2, 1, 1}, 3}};
  return spec;
}

// Uncached: the closed form rebuilds every step of the recurrence.
void BM_KernelClosedForm(benchmark::State& state) {
  const KernelFamily f{Problem::DirichletNeumann, Side::QFamily, Mode::Circular};
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p2m_closed_form(f, m));
}
BENCHMARK(BM_KernelClosedForm)->DenseRange(1, 6);

void BM_KernelCached(benchmark::State& state) {
  const KernelFamily f{Problem::Dirichlet, Side::PFamily, Mode::Hyperbolic};
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p2m(f, m));
}
BENCHMARK(BM_KernelCached)->DenseRange(1, 6);

void BM_SolveExample4(benchmark::State& state) {
  const ProblemSpec spec = example4();
  for (auto _ : state) benchmark::DoNotOptimize(solve(spec));
}
BENCHMARK(BM_SolveExample4);

void BM_EvalDouble(benchmark::State& state) {
  const QuasiPoly u = solve(example4()).u;
  const EvalPoint pt{{0.3, -0.2, 0.7}, 0.4, 1.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(eval(u, pt));
}
BENCHMARK(BM_EvalDouble);

void BM_EvalHighPrecision(benchmark::State& state) {
  const QuasiPoly u = solve(example4()).u;
  const HighPrecisionPoint pt = to_high_precision(EvalPoint{{0.3, -0.2, 0.7}, 0.4, 1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(eval(u, pt));
}
BENCHMARK(BM_EvalHighPrecision);

}  // namespace

BENCHMARK_MAIN();
