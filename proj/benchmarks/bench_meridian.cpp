#include <benchmark/benchmark.h>

#include <cmath>

#include "meridian/contour.hpp"
#include "meridian/families.hpp"
#include "meridian/shape_analysis.hpp"
#include "meridian/translation.hpp"
#include "meridian/verify.hpp"

using namespace meridian;

static void BM_EvaluateF(benchmark::State& state) {
    const Shape s{1.7, 1.2};
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_f(s));
}
BENCHMARK(BM_EvaluateF);

static void BM_SolveScalene(benchmark::State& state) {
    const double a = std::acos(-0.125);
    for (auto _ : state) {
        const auto p = solve_scalene(a);
        benchmark::DoNotOptimize(solve_shape(p.upper));
    }
}
BENCHMARK(BM_SolveScalene);

static void BM_SolveIsosceles(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_isosceles({1.0}));
}
BENCHMARK(BM_SolveIsosceles);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_re_for_arc(std::acos(-1.0) / 6.0));
}
BENCHMARK(BM_Enumerate);

static void BM_Verify(benchmark::State& state) {
    const Configuration c = solve_isosceles({1.0});
    for (auto _ : state) benchmark::DoNotOptimize(verify_configuration(c));
}
BENCHMARK(BM_Verify);

static void BM_FamilyTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scalene_family_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FamilyTable)->Arg(20)->Arg(200);

static void BM_Contour(benchmark::State& state) {
    ContourGrid g;
    g.resolution = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_and_trace(g));
}
BENCHMARK(BM_Contour)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
