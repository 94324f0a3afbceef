#include <benchmark/benchmark.h>

#include <random>

#include "latcoh/root.hpp"
#include "latcoh/weightfn.hpp"

using namespace latcoh;

namespace {

WeightTable large_table(uint64_t seed) {
    std::mt19937_64 rng(seed);
    Table t(Rect::box({100, 100}));
    for (int64_t i = 0; i < t.size(); ++i) t.at_index(i) = int64_t(rng() % 41) - 20;
    return WeightTable{t};
}

void BM_GradedRootLarge(benchmark::State& state) {
    WeightTable w = large_table(11);
    for (auto _ : state) benchmark::DoNotOptimize(graded_root_of(w));
}

void BM_RootFromTau(benchmark::State& state) {
    std::mt19937_64 rng(13);
    std::vector<int64_t> tau;
    for (int i = 0; i < 10000; ++i) tau.push_back(int64_t(rng() % 9) - 4);
    for (auto _ : state) benchmark::DoNotOptimize(root_from_tau(tau));
}

} // namespace

BENCHMARK(BM_GradedRootLarge);
BENCHMARK(BM_RootFromTau);
