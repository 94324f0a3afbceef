#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latcoh/cubes.hpp"
#include "latcoh/table.hpp"

namespace latcoh {

// Finite Z[U]-module piece T_{2m}(len) with multiplicity; start = 2m.
struct Piece {
    int64_t start = 0;
    int64_t len = 0;
    int64_t mult = 0;
    bool operator==(const Piece&) const = default;
};

// One cohomological degree: infinite tails T^+_{2m} plus finite pieces.
struct QPart {
    std::vector<int64_t> tails;  // sorted starts 2m
    std::vector<Piece> pieces;   // sorted by (start, len)
    bool operator==(const QPart&) const = default;
};

struct TorsionEntry {
    int64_t level = 0;
    int q = 0;
    std::vector<int64_t> factors; // non-unit invariant factors
    bool operator==(const TorsionEntry&) const = default;
};

struct UModule {
    std::vector<QPart> parts; // index = q
    int64_t min_w = 0;
    std::vector<TorsionEntry> torsion;
    bool operator==(const UModule&) const = default;
};

int64_t reduced_rank(const QPart& part);
int64_t eu_of(const UModule& m);

// Cell-count guard for full cube-complex computations.
inline constexpr int64_t kCellCap = 2'000'000;

// Cubes of weight <= n, grouped by dimension, canonical order
// (base point lex, then direction set lex).
struct SublevelComplex {
    int64_t level = 0;
    std::vector<std::vector<std::pair<Point, uint32_t>>> cubes;
};

SublevelComplex sublevel(const WeightTable& w, int64_t n);

struct LevelCohomology {
    int64_t betti = 0;
    std::vector<int64_t> torsion;
};

// Integral cohomology H^q(S_n): rational betti from the barcode, torsion
// from the Smith form of the degree-q boundary (rank >= 4 only; lower ranks
// are torsion-free since the complexes embed in R^3).
LevelCohomology cohomology_at_level(const WeightTable& w, int64_t n, int q);

// Barcode decomposition of all H^q(S_n) with the restriction U-action.
UModule u_module(const WeightTable& w);

struct EulerReport {
    int64_t min_w = 0;
    int64_t eu_total = 0;
    int64_t eu_h0 = 0;
    int64_t eu_cubes = 0;
    std::vector<int64_t> reduced_ranks;
};

// eu from the module ranks and the alternating cube-weight sum; the two are
// asserted equal.
EulerReport euler_report(const WeightTable& w);

// Coefficient of t^l = sum over direction sets I with l+E_I in range of
// (-1)^(|I|+1) w((l,I)); bases l in [lo, bound].
Table poincare_numerator(const WeightTable& w, const Point& bound);

} // namespace latcoh
