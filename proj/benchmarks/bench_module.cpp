#include <benchmark/benchmark.h>

#include <random>

#include "latcoh/complex.hpp"
#include "latcoh/hilbert.hpp"
#include "latcoh/weightfn.hpp"

using namespace latcoh;

namespace {

WeightTable curve_weight() {
    GradedSpace m = make_graded(2, {8, 8},
                                {{{0, 0}, 1}, {{2, 5}, 1}, {{4, 10}, 1}, {{5, 2}, 1},
                                 {{6, 15}, 1}, {{7, 7}, 1}, {{10, 4}, 1}, {{15, 6}, 1}});
    HilbertTable h = hilbert_from_graded(m);
    return combinatorial_weight(h, symmetric_dual(h));
}

WeightTable random_weight(Point c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Table t(Rect::box(std::move(c)));
    for (int64_t i = 0; i < t.size(); ++i) t.at_index(i) = int64_t(rng() % 21) - 10;
    return WeightTable{t};
}

void BM_ModuleCurve(benchmark::State& state) {
    WeightTable w = curve_weight();
    for (auto _ : state) benchmark::DoNotOptimize(u_module(w));
}

void BM_ModuleRank3(benchmark::State& state) {
    WeightTable w = random_weight({12, 12, 12}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(u_module(w));
}

void BM_EulerReportRank3(benchmark::State& state) {
    WeightTable w = random_weight({12, 12, 12}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(euler_report(w));
}

} // namespace

BENCHMARK(BM_ModuleCurve);
BENCHMARK(BM_ModuleRank3);
BENCHMARK(BM_EulerReportRank3);

BENCHMARK_MAIN();
