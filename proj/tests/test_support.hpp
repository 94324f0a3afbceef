#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "latcoh/errors.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/table.hpp"

// Runs an expression expected to throw latcoh::Error with a given code.
#define CHECK_ERR(expr, wanted)                         \
    do {                                                \
        bool caught_ = false;                           \
        try {                                           \
            (void)(expr);                               \
        } catch (const latcoh::Error& e_) {             \
            caught_ = true;                             \
            CHECK(e_.code() == (wanted));               \
        }                                               \
        CHECK_MESSAGE(caught_, "no error from " #expr); \
    } while (0)

namespace latcoh::testing {

inline PlumbingGraph make_graph(const std::vector<std::pair<std::string, int64_t>>& vs,
                                const std::vector<std::pair<std::string, std::string>>& es) {
    std::vector<Vertex> vertices;
    for (const auto& [id, e] : vs) vertices.push_back({id, e, 0});
    return PlumbingGraph(std::move(vertices), es);
}

// Chain v0 - v1 - ... with the given self-intersections.
inline PlumbingGraph chain(const std::vector<int64_t>& es) {
    std::vector<std::pair<std::string, int64_t>> vs;
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < es.size(); ++i) {
        vs.emplace_back("v" + std::to_string(i), es[i]);
        if (i) edges.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
    }
    return make_graph(vs, edges);
}

// Star: center e0 with one extra vertex per leg value.
inline PlumbingGraph star(int64_t e0, const std::vector<int64_t>& legs) {
    std::vector<std::pair<std::string, int64_t>> vs{{"v0", e0}};
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < legs.size(); ++i) {
        vs.emplace_back("v" + std::to_string(i + 1), legs[i]);
        edges.emplace_back("v0", "v" + std::to_string(i + 1));
    }
    return make_graph(vs, edges);
}

inline PlumbingGraph e8() {
    auto g = chain({-2, -2, -2, -2, -2, -2, -2});
    std::vector<Vertex> vs = g.vertices();
    vs.push_back({"v7", -2, 0});
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i + 1 < 7; ++i)
        es.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
    es.emplace_back("v4", "v7");
    return PlumbingGraph(std::move(vs), es);
}

inline PlumbingGraph two_cusps() {
    return make_graph({{"a0", -2}, {"n0", -1}, {"m", -13}, {"n1", -1}, {"a1", -2},
                       {"l0", -3}, {"l1", -3}},
                      {{"a0", "n0"}, {"n0", "m"}, {"m", "n1"}, {"n1", "a1"},
                       {"n0", "l0"}, {"n1", "l1"}});
}

inline PlumbingGraph superiso() {
    return make_graph({{"b0", -2}, {"b1", -2}, {"n0", -1}, {"b3", -31}, {"n1", -1},
                       {"b5", -3}, {"b6", -2}, {"b7", -2}, {"l0", -4}, {"l1", -2}},
                      {{"b0", "b1"}, {"b1", "n0"}, {"n0", "b3"}, {"b3", "n1"},
                       {"n1", "b5"}, {"b5", "b6"}, {"b6", "b7"}, {"n0", "l0"},
                       {"n1", "l1"}});
}

// Dense table over R(0,c) from per-l1 rows (rank 2): rows[l1][l2].
inline Table table2(int64_t c1, int64_t c2, const std::vector<std::vector<int64_t>>& rows) {
    Table t(Rect::box({c1, c2}));
    for (int64_t l1 = 0; l1 <= c1; ++l1)
        for (int64_t l2 = 0; l2 <= c2; ++l2) t.at({l1, l2}) = rows[size_t(l1)][size_t(l2)];
    return t;
}

inline Table table1(const std::vector<int64_t>& vals) {
    Table t(Rect::box({int64_t(vals.size()) - 1}));
    for (size_t i = 0; i < vals.size(); ++i) t.at_index(int64_t(i)) = vals[i];
    return t;
}

} // namespace latcoh::testing
