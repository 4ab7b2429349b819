#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "tiltgait/atlas.hpp"
#include "tiltgait/attitude_map.hpp"
#include "tiltgait/gait.hpp"
#include "tiltgait/singularity.hpp"
#include "tiltgait/solver.hpp"

using namespace tiltgait;

namespace {

// rotating inputs keep the loop from being constant-folded
std::vector<GaitTrig> bench_trigs() {
  std::vector<GaitTrig> v;
  for (int k = 0; k < 64; ++k) {
    const double a = -1.5 + 0.047 * k;
    v.emplace_back(a, -a * 0.7, a * 0.3, 1.4 - a);
  }
  return v;
}

void BM_EvalFullCondition(benchmark::State& state) {
  const auto gs = bench_trigs();
  const AttitudeTrig a(Attitude(0.15, -0.45));
  std::size_t i = 0;
  double acc = 0.0;
  for (auto _ : state) {
    acc += eval_full_condition(gs[i++ & 63], a);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_EvalFullCondition);

void BM_Linearize(benchmark::State& state) {
  const auto gs = bench_trigs();
  std::size_t i = 0;
  double acc = 0.0;
  for (auto _ : state) {
    acc += linearize(gs[i++ & 63]).r;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Linearize);

void BM_RefineRoot(benchmark::State& state) {
  const FrontPair fp(0.4, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine_root(fp, 0.3, -0.1));
  }
}
BENCHMARK(BM_RefineRoot);

void BM_SolveRearAngles(benchmark::State& state) {
  const FrontPair fp(0.4, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_rear_angles(fp));
  }
}
BENCHMARK(BM_SolveRearAngles);

void BM_SweepGrid(benchmark::State& state) {
  const GridSpec grid{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_grid({}, grid, 1));
  }
}
BENCHMARK(BM_SweepGrid)->Arg(5)->Arg(9)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_SingularLocus(benchmark::State& state) {
  // biased point with real contours in the square
  const GaitPoint g(0.6, -0.8, 0.8 * (0.334198 - 0.6), 0.8 * (-0.334198 + 0.8));
  AttitudeGrid grid;
  grid.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(singular_locus(g, grid));
  }
}
BENCHMARK(BM_SingularLocus)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_GaitUnion(benchmark::State& state) {
  RectangleSpec spec;
  spec.alpha1_lo = kPi / 8;
  spec.alpha1_hi = 3 * kPi / 8;
  spec.alpha2_lo = -3 * kPi / 8;
  spec.alpha2_hi = -kPi / 8;
  spec.branch = BranchSelect::Red;
  const Gait biased = bias_gait(rectangle_gait(spec), BiasSpec(0.8));
  AttitudeGrid grid;
  grid.resolution = 401;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gait_singular_union(biased, static_cast<int>(state.range(0)), grid, 1));
  }
}
BENCHMARK(BM_GaitUnion)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
