#include "latcoh/weightfn.hpp"

#include <algorithm>

#include "latcoh/parallel.hpp"

namespace latcoh {

void require_qhs3(const PlumbingGraph& g) {
    expect(check_graph(g).qhs3_link, Err::NotQHS3,
           "operation requires a negative-definite genus-0 tree");
}

Cycle default_bound(const PlumbingGraph& g) { return floor_positive(canonical_cycle(g)); }

namespace {

// chi(l) = (sum_v l_v k_v - (l,l)) / 2 with k_v = (Z_K, E_v) = e_v + 2 - 2 g_v.
// Entirely in checked integers; chi is integral on L so the division is exact.
struct ChiEvaluator {
    const PlumbingGraph& g;
    std::vector<int64_t> k;

    explicit ChiEvaluator(const PlumbingGraph& graph) : g(graph) {
        k.reserve(g.size());
        for (const auto& v : g.vertices())
            k.push_back(checked_sub(checked_add(v.e, 2), checked_mul(2, v.g)));
    }
    int64_t operator()(const Cycle& l) const {
        int64_t lin = 0;
        for (int v = 0; v < g.size(); ++v) lin = checked_add(lin, checked_mul(l[v], k[v]));
        int64_t quad = g.pair(l, l);
        int64_t twice = checked_sub(lin, quad);
        expect(twice % 2 == 0, Err::NonIntegerChi, "chi is not an integer");
        return twice / 2;
    }
};

} // namespace

WeightTable top_weight(const PlumbingGraph& g, std::optional<Cycle> c) {
    require_qhs3(g);
    Cycle bound = c ? *c : default_bound(g);
    expect(static_cast<int>(bound.size()) == g.size(), Err::ShapeMismatch,
           "bound length does not match vertex count");
    for (int64_t b : bound) expect(b >= 0, Err::BadInput, "bound must be >= 0");

    Rect r = Rect::box(bound);
    Table t(r);
    ChiEvaluator chi(g);
    const int s = r.rank();
    const int last = s - 1;
    const int64_t len = r.extent(last);
    const int64_t rows = r.count() / len;
    const int64_t e_last = g.vertices()[last].e;

    parallel_for(rows, [&](int64_t row) {
        int64_t base = row * len;
        Point p = r.point(base);
        int64_t value = chi(p);
        // (p, E_last), updated by e_last as the last coordinate advances.
        int64_t prod = g.pair_with_vertex(p, last);
        for (int64_t j = 0;;) {
            t.at_index(base + j) = value;
            if (++j == len) break;
            value = checked_add(value, checked_sub(1, prod));
            prod = checked_add(prod, e_last);
        }
    });
    return WeightTable{std::move(t)};
}

WeightTable combinatorial_weight(const HilbertTable& h, const DualTable& dual) {
    expect(h.t.rect() == dual.t.rect(), Err::ShapeMismatch, "hilbert/dual rectangles differ");
    Table out(h.t.rect());
    int64_t base = dual.t.at_index(0); // value at lo
    for (int64_t i = 0; i < out.size(); ++i)
        out.at_index(i) =
            checked_sub(checked_add(h.t.at_index(i), dual.t.at_index(i)), base);
    return WeightTable{std::move(out)};
}

WeightTable reduced_top_weight(const PlumbingGraph& g, const std::vector<int>& bar,
                               std::optional<Cycle> cbar) {
    require_qhs3(g);
    expect(!bar.empty(), Err::BadSubset, "vertex subset is empty");
    std::vector<char> seen(g.size(), 0);
    for (int v : bar) {
        expect(v >= 0 && v < g.size(), Err::BadSubset, "subset vertex index out of range");
        expect(!seen[v], Err::BadSubset, "duplicate vertex in subset");
        seen[v] = 1;
    }

    Cycle bound;
    if (cbar) {
        bound = *cbar;
        expect(bound.size() == bar.size(), Err::ShapeMismatch,
               "bound length does not match subset size");
        for (int64_t b : bound) expect(b >= 0, Err::BadInput, "bound must be >= 0");
    } else {
        Cycle full = default_bound(g);
        bound.reserve(bar.size());
        for (int v : bar) bound.push_back(full[v]);
    }

    Rect r = Rect::box(bound);
    Table t(r);
    ChiEvaluator chi(g);

    // x(lbar + E_v) is the Laufer closure of x(lbar) + E_{bar[v]}, so the
    // whole table of universal cycles fills by lexicographic recursion.
    std::vector<Cycle> x(static_cast<size_t>(r.count()));
    x[0] = Cycle(g.size(), 0);
    t.at_index(0) = 0;
    Point p = r.lo();
    int64_t idx = 0;
    while (r.next(p)) {
        ++idx;
        int v = r.rank() - 1;
        while (p[v] == 0) --v;
        Point prev = p;
        --prev[v];
        Cycle seed = x[static_cast<size_t>(r.index(prev))];
        seed[bar[v]] = checked_add(seed[bar[v]], 1);
        Cycle cyc = universal_cycle_from(g, bar, std::move(seed));
        t.at_index(idx) = chi(cyc);
        x[static_cast<size_t>(idx)] = std::move(cyc);
    }
    return WeightTable{std::move(t)};
}

WeightTable reduced_an_weight(const HilbertTable& h, const Table& h1) {
    expect(h.t.rect() == h1.rect(), Err::ShapeMismatch, "hilbert/h1 rectangles differ");
    Table out(h.t.rect());
    for (int64_t i = 0; i < out.size(); ++i)
        out.at_index(i) = checked_sub(h.t.at_index(i), h1.at_index(i));
    return WeightTable{std::move(out)};
}

} // namespace latcoh
