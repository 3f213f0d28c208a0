// Serial reference versus OpenMP schedule for the parallel kernels.
// Argument 0 runs Schedule::Serial, 1 runs Schedule::Parallel.

#include "apolar/case22.hpp"
#include "apolar/casef1.hpp"
#include "apolar/decompose.hpp"
#include "apolar/secant_rank.hpp"

#include <benchmark/benchmark.h>

using namespace apolar;

namespace {

Schedule schedule_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Schedule::Serial : Schedule::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

void BM_Multistart(benchmark::State& state) {
  const auto f = to_float(random_form(SurfaceRing::f1(), Side::S, {3, 6}, 12));
  DecomposeOptions opts;
  opts.schedule = schedule_of(state);
  opts.tolerance = 1e-300;  // run every start to the iteration cap
  opts.restarts = 32;
  opts.max_iterations = 40;
  const auto problem = DecompositionProblem::from_form(f, 8, opts);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_newton_decompose(problem, 1));
  label(state);
}
BENCHMARK(BM_Multistart)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CertifyRank(benchmark::State& state) {
  const std::vector<std::uint64_t> seeds{1, 2, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_rank(SurfaceRing::p1xp1(), {4, 4}, seeds, schedule_of(state)));
  label(state);
}
BENCHMARK(BM_CertifyRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HyperplaneSamples(benchmark::State& state) {
  const auto ctx = build_context(general_form_22(5).first);
  for (auto _ : state) benchmark::DoNotOptimize(hyperplane_section_check(ctx, 16, 11, schedule_of(state)));
  label(state);
}
BENCHMARK(BM_HyperplaneSamples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_F1Samples(benchmark::State& state) {
  const auto ctx = build_f1_context(general_form_f1(1).first);
  for (auto _ : state) benchmark::DoNotOptimize(vps_f1_samples(ctx, 4, 41, schedule_of(state)));
  label(state);
}
BENCHMARK(BM_F1Samples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
