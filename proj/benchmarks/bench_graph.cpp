#include <benchmark/benchmark.h>

#include "latcoh/graph.hpp"
#include "latcoh/reduce.hpp"
#include "latcoh/weightfn.hpp"

using namespace latcoh;

namespace {

PlumbingGraph cone_graph() {
    std::vector<Vertex> vs{{"b0", -2, 0}, {"b1", -2, 0}, {"n0", -1, 0}, {"b3", -31, 0},
                           {"n1", -1, 0}, {"b5", -3, 0}, {"b6", -2, 0}, {"b7", -2, 0},
                           {"l0", -4, 0}, {"l1", -2, 0}};
    std::vector<std::pair<std::string, std::string>> es{
        {"b0", "b1"}, {"b1", "n0"}, {"n0", "b3"}, {"b3", "n1"},
        {"n1", "b5"}, {"b5", "b6"}, {"b6", "b7"}, {"n0", "l0"}, {"n1", "l1"}};
    return PlumbingGraph(std::move(vs), es);
}

void BM_CheckGraph(benchmark::State& state) {
    PlumbingGraph g = cone_graph();
    for (auto _ : state) benchmark::DoNotOptimize(check_graph(g));
}

void BM_FundamentalCycle(benchmark::State& state) {
    PlumbingGraph g = cone_graph();
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}

void BM_UniversalCycle(benchmark::State& state) {
    PlumbingGraph g = cone_graph();
    std::vector<int> bar{g.index_of("n0"), g.index_of("n1")};
    for (auto _ : state) benchmark::DoNotOptimize(universal_cycle(g, bar, {15, 17}));
}

void BM_ReducedWeight(benchmark::State& state) {
    PlumbingGraph g = cone_graph();
    std::vector<int> bar{g.index_of("n0"), g.index_of("n1")};
    for (auto _ : state) benchmark::DoNotOptimize(reduced_top_weight(g, bar));
}

} // namespace

BENCHMARK(BM_CheckGraph);
BENCHMARK(BM_FundamentalCycle);
BENCHMARK(BM_UniversalCycle);
BENCHMARK(BM_ReducedWeight);
