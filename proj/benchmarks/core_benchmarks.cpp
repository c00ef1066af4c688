#include <benchmark/benchmark.h>

#include "unlock/balls.hpp"
#include "unlock/cylinders.hpp"
#include "unlock/platonic_sweep.hpp"

using namespace unlock;

static void BM_LineDistance(benchmark::State& state) {
    const Line a{{0.3, -1.2, 0.7}, UnitVec3::of({1, 2, 3})};
    const Line b{{-0.5, 0.4, 2.1}, UnitVec3::of({-2, 1, 1})};
    for (auto _ : state) benchmark::DoNotOptimize(line_distance(a, b));
}
BENCHMARK(BM_LineDistance);

static void BM_PairwiseMaxRadius(benchmark::State& state) {
    const CylinderConfig c = c6_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(pairwise_max_radius(c.generatrices[0], c.generatrices[1]));
}
BENCHMARK(BM_PairwiseMaxRadius);

static void BM_CommonRadiusC6(benchmark::State& state) {
    const CylinderConfig c = c6_config();
    for (auto _ : state) benchmark::DoNotOptimize(common_radius(c));
}
BENCHMARK(BM_CommonRadiusC6);

static void BM_CommonRadiusIcosaSweep(benchmark::State& state) {
    const CylinderConfig c = delta_config(DualPair::ID, 0.69);
    for (auto _ : state) benchmark::DoNotOptimize(common_radius(c));
}
BENCHMARK(BM_CommonRadiusIcosaSweep);

static void BM_MaxCommonBallRadius(benchmark::State& state) {
    const std::vector<UnitVec3> dirs = fcc_config().directions;
    for (auto _ : state) benchmark::DoNotOptimize(max_common_radius(dirs));
}
BENCHMARK(BM_MaxCommonBallRadius);

BENCHMARK_MAIN();
