#include <memory>

#include <benchmark/benchmark.h>

#include "fr1d/ader.hpp"
#include "fr1d/lwfr.hpp"

namespace {

using namespace fr1d;

ProblemSpec wavepacket() {
  ProblemSpec p;
  p.flux = FluxSpec::linear(5.0);
  p.ic = named_initial_condition("wavepacket");
  return p;
}

SolutionField field(int degree, int n_elem, const ProblemSpec& p) {
  auto basis = std::make_shared<const Basis>(
      build_basis(NodeKind::GaussLegendre, degree, CorrectionKind::Radau));
  return sample_initial_condition(make_grid(-1.0, 1.0, n_elem), basis, p.ic.value);
}

double step_size(int degree, int n_elem) {
  return 0.9 * (2.0 / n_elem) / (5.0 * (degree + 1) * (2 * degree + 1));
}

void BM_AderStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = wavepacket();
  const SolutionField f = field(n, 240 / (n + 1), p);
  const double dt = step_size(n, 240 / (n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(ader_step(f, p, dt));
  state.SetItemsProcessed(state.iterations() * 240);
}
BENCHMARK(BM_AderStep)->DenseRange(1, 5);

void BM_AderStepPicard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = wavepacket();
  const SolutionField f = field(n, 240 / (n + 1), p);
  const double dt = step_size(n, 240 / (n + 1));
  AderOptions opts;
  opts.predictor = PredictorMethod::Picard;
  for (auto _ : state) benchmark::DoNotOptimize(ader_step(f, p, dt, opts));
  state.SetItemsProcessed(state.iterations() * 240);
}
BENCHMARK(BM_AderStepPicard)->DenseRange(1, 5);

void BM_LwStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Dissipation kind = state.range(1) == 1 ? Dissipation::D1 : Dissipation::D2;
  const ProblemSpec p = wavepacket();
  const SolutionField f = field(n, 240 / (n + 1), p);
  const double dt = step_size(n, 240 / (n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(lwfr_step(f, p, dt, kind));
  state.SetItemsProcessed(state.iterations() * 240);
}
BENCHMARK(BM_LwStep)->ArgsProduct({{1, 2, 3, 4, 5}, {1, 2}});

void BM_PredictorDirectSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Basis b = build_basis(NodeKind::GaussLegendre, n, CorrectionKind::Radau);
  const DirectPredictorSolver solver(b, 5.0, 1e-3, 0.05);
  const Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(n + 1, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(u));
}
BENCHMARK(BM_PredictorDirectSolve)->DenseRange(1, 10, 3);

void BM_PredictorPicardSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Basis b = build_basis(NodeKind::GaussLegendre, n, CorrectionKind::Radau);
  const PicardPredictorSolver solver(b, FluxSpec::linear(5.0), 1e-3, 0.05, 0);
  const Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(n + 1, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(u));
}
BENCHMARK(BM_PredictorPicardSolve)->DenseRange(1, 10, 3);

void BM_TimeAveragedSolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Basis b = build_basis(NodeKind::GaussLegendre, n, CorrectionKind::Radau);
  const Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(n + 1, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(time_averaged_solution(b, 5.0, u, 1e-3, 0.05));
}
BENCHMARK(BM_TimeAveragedSolution)->DenseRange(1, 10, 3);

}  // namespace

BENCHMARK_MAIN();
