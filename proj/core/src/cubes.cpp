#include "latcoh/cubes.hpp"

#include <algorithm>
#include <bit>

namespace latcoh {

CubeComplex::CubeComplex(const Table& w, int64_t cell_cap) : rank_(w.rect().rank()) {
    expect(rank_ >= 1 && rank_ <= 30, Err::BadInput, "cube complex rank out of range");
    const Rect& r = w.rect();

    // Count cells before materializing anything.
    cells_ = 0;
    for (uint32_t mask = 0; mask < mask_count(); ++mask) {
        int64_t n = 1;
        for (int a = 0; a < rank_; ++a) {
            int64_t ext = r.extent(a) - ((mask >> a) & 1);
            n = checked_mul(n, ext);
        }
        if (n > 0) cells_ = checked_add(cells_, n);
    }
    if (cell_cap > 0)
        expect(cells_ <= cell_cap, Err::TooLarge,
               "cube complex has " + std::to_string(cells_) + " cells, cap is " +
                   std::to_string(cell_cap));

    valid_.assign(mask_count(), 0);
    weights_.resize(mask_count());
    weights_[0] = w;
    valid_[0] = 1;
    for (uint32_t mask = 1; mask < mask_count(); ++mask) {
        int low = std::countr_zero(mask);
        uint32_t rest = mask & (mask - 1);
        if (!valid_[rest] || r.extent(low) < 2) continue;
        const Table& prev = weights_[rest];
        Point hi = prev.rect().hi();
        if (hi[low] == prev.rect().lo()[low]) continue;
        --hi[low];
        Rect shrunk(prev.rect().lo(), hi);
        Table t(shrunk);
        Point p = shrunk.lo();
        int64_t idx = 0;
        do {
            Point top = p;
            ++top[low];
            t.at_index(idx++) = std::max(prev.at(p), prev.at(top));
        } while (shrunk.next(p));
        weights_[mask] = std::move(t);
        valid_[mask] = 1;
    }
}

int64_t CubeComplex::alternating_weight_sum() const {
    int64_t total = 0;
    for (uint32_t mask = 0; mask < mask_count(); ++mask) {
        if (!valid_[mask]) continue;
        int q = std::popcount(mask);
        const Table& t = weights_[mask];
        int64_t part = 0;
        for (int64_t i = 0; i < t.size(); ++i) part = checked_add(part, t.at_index(i));
        total = (q % 2 == 1) ? checked_add(total, part) : checked_sub(total, part);
    }
    return total;
}

} // namespace latcoh
