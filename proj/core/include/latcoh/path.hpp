#pragma once

#include <cstdint>
#include <vector>

#include "latcoh/complex.hpp"
#include "latcoh/table.hpp"

namespace latcoh {

// A lattice path: consecutive points differ by a unit step; points distinct.
struct LatticePath {
    std::vector<Point> points;
    bool increasing = false; // every step adds a basis vector
};

LatticePath make_path(std::vector<Point> points);

// Euler characteristic of a path's lattice cohomology together with the
// module it decomposes into (concentrated in q = 0).
struct PathEu {
    int64_t eu = 0;
    UModule module;
};

PathEu eu_path(const WeightTable& w, const LatticePath& path);

// Minimal eu over increasing paths from the bottom to the top corner, with
// the lexicographically smallest sequence of step directions attaining it.
struct MinEuPath {
    int64_t value = 0;
    std::vector<int> directions;
};

MinEuPath min_eu_increasing(const WeightTable& w);

} // namespace latcoh
