#pragma once

#include <cstdint>
#include <vector>

namespace latcoh {

// A filtered complex: cells listed in filtration order (weights
// nondecreasing, every face before its cofaces). Boundaries reference cell
// positions in that order with integer incidence coefficients.
struct FilteredComplex {
    std::vector<int> dim;
    std::vector<int64_t> weight;
    std::vector<std::vector<std::pair<int64_t, int64_t>>> boundary; // sorted by cell
};

// One interval of the rational barcode of the sublevel filtration.
// A finite bar [birth, death) in dimension q: a class alive at the integer
// levels birth..death-1. Essential bars survive to the top.
struct Bar {
    int q = 0;
    int64_t birth = 0;
    int64_t death = 0;
    bool essential = false;
};

// Standard column reduction over the exact rationals. Zero-length finite
// bars (birth == death) are dropped. Bars are returned sorted by
// (q, birth, death, essential-last).
std::vector<Bar> barcode(const FilteredComplex& fc);

} // namespace latcoh
