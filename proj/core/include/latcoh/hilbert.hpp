#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "latcoh/table.hpp"

namespace latcoh {

// Finitely supported graded vector space with degrees in [0,c) union
// the coordinate slabs below c: every degree a satisfies a >= 0 and a !>= c.
struct GradedEntry {
    Point deg;
    int64_t dim = 0;
};

struct GradedSpace {
    int rank = 0;
    Point c;
    std::vector<GradedEntry> entries; // distinct degrees, lex sorted, dims > 0
};

GradedSpace make_graded(int rank, Point c, std::vector<GradedEntry> entries);
int64_t total_dim(const GradedSpace& m);

// Newton diagram given by its faces: primitive positive normal and level,
// face sigma on the affine plane <normal, p> = m.
struct NewtonFace {
    Point normal;
    int64_t m = 0;
};

struct NewtonDiagram {
    int dim = 0; // ambient dimension (number of variables)
    std::vector<NewtonFace> faces;
};

NewtonDiagram make_newton(int dim, std::vector<NewtonFace> faces);

// 2-D convenience: derive faces from consecutive boundary vertices of the
// diagram (each consecutive pair spans one face).
NewtonDiagram newton_from_boundary_2d(const std::vector<Point>& vertices);

// h(l) = total dimension at degrees a with a !>= l, on R(0,c).
HilbertTable hilbert_from_graded(const GradedSpace& m);

// Base points strictly under the diagram with their degree vectors
// deg(p)_i = <l_sigma_i, p - 1>; bound c_i = m_sigma_i + 1 - <l_sigma_i, 1>.
// EmptySpace when (1,...,1) is not under the diagram.
GradedSpace graded_from_newton(const NewtonDiagram& n);

// Exhaustive property checks; every false flag carries the lexicographically
// first witness under row-major scan order.
struct PropertyReport {
    bool matroid = true;
    std::optional<std::pair<Point, Point>> matroid_witness; // (l1, l2)
    bool stability = true;
    std::optional<std::tuple<Point, int, Point>> stability_witness; // (l, v, lbar)
    bool cdp = true;
    std::optional<std::pair<Point, int>> cdp_witness; // (l, v)
};

PropertyReport check_properties(const HilbertTable& h, const DualTable& dual);

// h^sym(l) = h(c - l).
DualTable symmetric_dual(const HilbertTable& h);

// S = { l : h(l+E_v) > h(l) for every v, vacuously at l_v = c_v };
// duality_ok <=> no v with c - E_v in S.
struct SemigroupResult {
    std::vector<Point> points; // lex sorted
    bool duality_ok = true;
};

SemigroupResult semigroup_from_hilbert(const HilbertTable& h);

// Reconstruction under the unit-jump hypothesis:
// h(l+E_v) - h(l) = [exists s in S with s >= l and s_v = l_v].
// NotUnitJump when the jump data is inconsistent.
HilbertTable hilbert_from_semigroup(const std::vector<Point>& s, const Point& c);

} // namespace latcoh
