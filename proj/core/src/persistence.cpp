#include "latcoh/persistence.hpp"

#include <algorithm>

#include "latcoh/errors.hpp"
#include "latcoh/rational.hpp"

namespace latcoh {

namespace {

using Column = std::vector<std::pair<int64_t, Rational>>; // sorted by row

// dst += c * src, merging sorted sparse columns.
Column add_scaled(const Column& dst, const Column& src, const Rational& c) {
    Column out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            ++j;
        } else {
            Rational v = dst[i].second + c * src[j].second;
            if (!(v == Rational(0))) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

std::vector<Bar> barcode(const FilteredComplex& fc) {
    const int64_t m = static_cast<int64_t>(fc.dim.size());
    expect(static_cast<int64_t>(fc.weight.size()) == m &&
               static_cast<int64_t>(fc.boundary.size()) == m,
           Err::ShapeMismatch, "filtered complex arrays disagree");

    std::vector<Column> reduced(static_cast<size_t>(m));
    std::vector<int64_t> pair_of_low(static_cast<size_t>(m), -1);
    std::vector<char> paired(static_cast<size_t>(m), 0); // positive cell got killed

    std::vector<Bar> bars;
    for (int64_t j = 0; j < m; ++j) {
        Column col;
        col.reserve(fc.boundary[j].size());
        for (const auto& [row, coeff] : fc.boundary[j]) {
            expect(row >= 0 && row < j, Err::BadInput, "boundary must reference earlier cells");
            col.emplace_back(row, Rational(coeff));
        }
        while (!col.empty()) {
            int64_t low = col.back().first;
            int64_t other = pair_of_low[static_cast<size_t>(low)];
            if (other < 0) break;
            const Column& prev = reduced[static_cast<size_t>(other)];
            Rational factor = -(col.back().second / prev.back().second);
            col = add_scaled(col, prev, factor);
        }
        if (col.empty()) continue; // positive cell: candidate class
        int64_t low = col.back().first;
        pair_of_low[static_cast<size_t>(low)] = j;
        paired[static_cast<size_t>(low)] = 1;
        reduced[static_cast<size_t>(j)] = std::move(col);
        if (fc.weight[j] > fc.weight[low])
            bars.push_back(Bar{fc.dim[low], fc.weight[low], fc.weight[j], false});
    }
    for (int64_t i = 0; i < m; ++i) {
        // Essential classes: positive cells (zero reduced boundary) never killed.
        bool positive = reduced[static_cast<size_t>(i)].empty();
        if (positive && !paired[static_cast<size_t>(i)])
            bars.push_back(Bar{fc.dim[i], fc.weight[i], 0, true});
    }
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.essential != b.essential) return !a.essential;
        return a.death < b.death;
    });
    return bars;
}

} // namespace latcoh
