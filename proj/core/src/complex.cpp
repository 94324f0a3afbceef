#include "latcoh/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "latcoh/persistence.hpp"
#include "latcoh/smith.hpp"

namespace latcoh {

int64_t reduced_rank(const QPart& part) {
    int64_t r = 0;
    for (const auto& p : part.pieces) r = checked_add(r, checked_mul(p.mult, p.len));
    return r;
}

int64_t eu_of(const UModule& m) {
    int64_t eu = checked_sub(0, m.min_w);
    for (size_t q = 0; q < m.parts.size(); ++q) {
        int64_t r = reduced_rank(m.parts[q]);
        eu = (q % 2 == 0) ? checked_add(eu, r) : checked_sub(eu, r);
    }
    return eu;
}

namespace {

// Direction-set order: sets compared as sorted lists, i.e. the mask holding
// the smallest differing axis comes first.
bool mask_before(uint32_t a, uint32_t b) {
    if (a == b) return false;
    uint32_t d = a ^ b;
    return (a >> std::countr_zero(d)) & 1u;
}

struct CellKey {
    int64_t weight;
    int dim;
    int64_t base_full; // index of the base point in the full rectangle
    uint32_t mask;
    int64_t mask_idx; // index in the mask's base rectangle
};

// All cells sorted by (weight, dim, base point, direction set).
std::vector<CellKey> sorted_cells(const CubeComplex& cc, const Rect& full) {
    std::vector<CellKey> cells;
    cells.reserve(static_cast<size_t>(cc.cells()));
    for (uint32_t mask = 0; mask < cc.mask_count(); ++mask) {
        if (!cc.mask_valid(mask)) continue;
        const Table& t = cc.weights(mask);
        const Rect& r = t.rect();
        int q = std::popcount(mask);
        Point p = r.lo();
        int64_t idx = 0;
        do {
            cells.push_back(CellKey{t.at_index(idx), q, full.index(p), mask, idx});
            ++idx;
        } while (r.next(p));
    }
    std::sort(cells.begin(), cells.end(), [](const CellKey& a, const CellKey& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.base_full != b.base_full) return a.base_full < b.base_full;
        return mask_before(a.mask, b.mask);
    });
    return cells;
}

// Filtration positions per (mask, mask_idx).
std::vector<std::vector<int64_t>> position_table(const CubeComplex& cc,
                                                 const std::vector<CellKey>& cells) {
    std::vector<std::vector<int64_t>> pos(cc.mask_count());
    for (uint32_t mask = 0; mask < cc.mask_count(); ++mask)
        if (cc.mask_valid(mask))
            pos[mask].assign(static_cast<size_t>(cc.cells_of_mask(mask)), -1);
    for (size_t i = 0; i < cells.size(); ++i)
        pos[cells[i].mask][static_cast<size_t>(cells[i].mask_idx)] = static_cast<int64_t>(i);
    return pos;
}

// Boundary of cell (mask, base p): k-th direction d (1-based among sorted
// set bits) contributes (-1)^(k-1) (top_k - bottom_k).
std::vector<std::pair<int64_t, int64_t>> cell_boundary(
    const CubeComplex& cc, const std::vector<std::vector<int64_t>>& pos, uint32_t mask,
    const Point& p) {
    std::vector<std::pair<int64_t, int64_t>> out;
    int k = 0;
    for (uint32_t rest = mask; rest; rest &= rest - 1) {
        int d = std::countr_zero(rest);
        int64_t sign = (k % 2 == 0) ? 1 : -1;
        ++k;
        uint32_t face = mask & ~(1u << d);
        const Rect& fr = cc.base_rect(face);
        Point top = p;
        ++top[d];
        out.emplace_back(pos[face][static_cast<size_t>(fr.index(p))], -sign);
        out.emplace_back(pos[face][static_cast<size_t>(fr.index(top))], sign);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FilteredComplex build_filtration(const CubeComplex& cc, const std::vector<CellKey>& cells,
                                 const std::vector<std::vector<int64_t>>& pos) {
    FilteredComplex fc;
    const size_t m = cells.size();
    fc.dim.resize(m);
    fc.weight.resize(m);
    fc.boundary.resize(m);
    for (size_t i = 0; i < m; ++i) {
        const CellKey& c = cells[i];
        fc.dim[i] = c.dim;
        fc.weight[i] = c.weight;
        if (c.mask)
            fc.boundary[i] =
                cell_boundary(cc, pos, c.mask, cc.base_rect(c.mask).point(c.mask_idx));
    }
    return fc;
}

// Torsion of H^q(S_n;Z) = torsion of H_{q-1}(S_n;Z) = non-unit invariant
// factors of the degree-q boundary restricted to the level-n prefix.
std::vector<int64_t> level_torsion(const FilteredComplex& fc, size_t prefix, int q) {
    std::vector<int64_t> rows, cols;
    for (size_t i = 0; i < prefix; ++i) {
        if (fc.dim[i] == q - 1) rows.push_back(static_cast<int64_t>(i));
        if (fc.dim[i] == q) cols.push_back(static_cast<int64_t>(i));
    }
    if (rows.empty() || cols.empty()) return {};
    std::vector<int64_t> row_of(prefix, -1);
    for (size_t i = 0; i < rows.size(); ++i) row_of[static_cast<size_t>(rows[i])] = i;
    std::vector<std::vector<int64_t>> m(rows.size(), std::vector<int64_t>(cols.size(), 0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [cell, coeff] : fc.boundary[static_cast<size_t>(cols[j])])
            m[static_cast<size_t>(row_of[static_cast<size_t>(cell)])][j] = coeff;
    std::vector<int64_t> torsion;
    for (int64_t f : smith_invariant_factors(std::move(m)))
        if (f > 1) torsion.push_back(f);
    return torsion;
}

size_t prefix_at_level(const FilteredComplex& fc, int64_t n) {
    size_t prefix = 0;
    while (prefix < fc.weight.size() && fc.weight[prefix] <= n) ++prefix;
    return prefix;
}

} // namespace

SublevelComplex sublevel(const WeightTable& w, int64_t n) {
    CubeComplex cc(w.t, kCellCap);
    SublevelComplex out;
    out.level = n;
    out.cubes.resize(static_cast<size_t>(cc.rank()) + 1);
    std::vector<CellKey> cells = sorted_cells(cc, w.t.rect());
    for (const CellKey& c : cells) {
        if (c.weight > n) break;
        out.cubes[static_cast<size_t>(c.dim)].emplace_back(cc.base_rect(c.mask).point(c.mask_idx),
                                                           c.mask);
    }
    return out;
}

LevelCohomology cohomology_at_level(const WeightTable& w, int64_t n, int q) {
    const int s = w.t.rect().rank();
    expect(q >= 0, Err::BadInput, "negative cohomological degree");
    CubeComplex cc(w.t, kCellCap);
    std::vector<CellKey> cells = sorted_cells(cc, w.t.rect());
    auto pos = position_table(cc, cells);
    FilteredComplex fc = build_filtration(cc, cells, pos);

    LevelCohomology out;
    for (const Bar& bar : barcode(fc)) {
        if (bar.q != q) continue;
        bool alive = bar.essential ? bar.birth <= n : (bar.birth <= n && n < bar.death);
        if (alive) ++out.betti;
    }
    if (s >= 4 && q >= 2 && q <= s - 1)
        out.torsion = level_torsion(fc, prefix_at_level(fc, n), q);
    return out;
}

UModule u_module(const WeightTable& w) {
    const int s = w.t.rect().rank();
    CubeComplex cc(w.t, kCellCap);
    std::vector<CellKey> cells = sorted_cells(cc, w.t.rect());
    auto pos = position_table(cc, cells);
    FilteredComplex fc = build_filtration(cc, cells, pos);

    UModule m;
    m.min_w = w.t.min_value();
    m.parts.resize(static_cast<size_t>(s));

    std::map<std::pair<int, std::pair<int64_t, int64_t>>, int64_t> mults;
    for (const Bar& bar : barcode(fc)) {
        expect(bar.q < s, Err::Internal, "class in the top cube dimension");
        if (bar.essential) {
            expect(bar.q == 0, Err::Internal, "essential class above degree 0");
            m.parts[0].tails.push_back(checked_mul(2, bar.birth));
        } else {
            ++mults[{bar.q, {bar.birth, bar.death}}];
        }
    }
    expect(m.parts[0].tails.size() == 1, Err::Internal, "expected exactly one essential class");
    expect(m.parts[0].tails[0] == checked_mul(2, m.min_w), Err::Internal,
           "essential class does not start at 2 min w");
    for (const auto& [key, mult] : mults) {
        const auto& [q, interval] = key;
        m.parts[static_cast<size_t>(q)].pieces.push_back(Piece{
            checked_mul(2, interval.first), checked_sub(interval.second, interval.first), mult});
    }

    if (s >= 4) {
        std::vector<int64_t> levels;
        for (const CellKey& c : cells)
            if (levels.empty() || levels.back() != c.weight) levels.push_back(c.weight);
        for (int64_t n : levels)
            for (int q = 2; q <= s - 1; ++q) {
                std::vector<int64_t> t = level_torsion(fc, prefix_at_level(fc, n), q);
                if (!t.empty()) m.torsion.push_back(TorsionEntry{n, q, std::move(t)});
            }
    }
    while (m.parts.size() > 1 && m.parts.back().tails.empty() && m.parts.back().pieces.empty())
        m.parts.pop_back();
    return m;
}

EulerReport euler_report(const WeightTable& w) {
    UModule m = u_module(w);
    EulerReport r;
    r.min_w = m.min_w;
    r.eu_total = eu_of(m);
    r.eu_h0 = checked_add(checked_sub(0, m.min_w), reduced_rank(m.parts[0]));
    for (const auto& part : m.parts) r.reduced_ranks.push_back(reduced_rank(part));
    r.eu_cubes = CubeComplex(w.t, kCellCap).alternating_weight_sum();
    expect(r.eu_cubes == r.eu_total, Err::Internal,
           "alternating cube-weight sum disagrees with the module euler characteristic");
    return r;
}

Table poincare_numerator(const WeightTable& w, const Point& bound) {
    const Rect& r = w.t.rect();
    expect(static_cast<int>(bound.size()) == r.rank(), Err::ShapeMismatch,
           "truncation rank mismatch");
    expect(r.contains(bound), Err::BadInput, "truncation bound outside the table");
    CubeComplex cc(w.t, kCellCap);
    Rect br(r.lo(), bound);
    Table out(br);
    Point l = br.lo();
    int64_t idx = 0;
    do {
        int64_t a = 0;
        for (uint32_t mask = 0; mask < cc.mask_count(); ++mask) {
            if (!cc.mask_valid(mask) || !cc.base_rect(mask).contains(l)) continue;
            int64_t v = cc.weights(mask).at(l);
            a = (std::popcount(mask) % 2 == 1) ? checked_add(a, v) : checked_sub(a, v);
        }
        out.at_index(idx++) = a;
    } while (br.next(l));
    return out;
}

} // namespace latcoh
