#include <benchmark/benchmark.h>

#include "causalmp/bounds.hpp"
#include "causalmp/info.hpp"
#include "causalmp/maxent.hpp"
#include "causalmp/polytope.hpp"

using namespace causalmp;

namespace {

const BinaryMarginal kMx{0.5, 0.4, 0.5};
const BinaryMarginal kMyDegenerate{0.9, 0.0, 0.6};
const BinaryMarginal kMyInterior{0.45, 0.45, 0.5};

void BM_BuildPolytope(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_polytope(kMx, kMyDegenerate));
    }
}
BENCHMARK(BM_BuildPolytope);

void BM_LpLambdaMin(benchmark::State& state) {
    const PolytopeSpec spec = build_polytope(kMx, kMyDegenerate);
    std::array<double, 16> obj{};
    for (int k = 0; k < 16; ++k) obj[k] = spec.A[0][k];
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_lp(obj, spec, LpSense::min));
    }
}
BENCHMARK(BM_LpLambdaMin);

void BM_TightenedBoundsClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(tightened_pns_bounds(kMx, kMyDegenerate));
    }
}
BENCHMARK(BM_TightenedBoundsClosedForm);

void BM_MaxEntDegenerate(benchmark::State& state) {
    const PolytopeSpec spec = build_polytope(kMx, kMyDegenerate);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maxent_scm(spec));
    }
}
BENCHMARK(BM_MaxEntDegenerate);

void BM_MaxEntInterior(benchmark::State& state) {
    const PolytopeSpec spec = build_polytope(kMx, kMyInterior);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maxent_scm(spec));
    }
}
BENCHMARK(BM_MaxEntInterior);

void BM_InfoReport(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(info_report(kMx, 0.35));
    }
}
BENCHMARK(BM_InfoReport);

}  // namespace

BENCHMARK_MAIN();
