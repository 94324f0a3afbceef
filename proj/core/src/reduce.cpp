#include "latcoh/reduce.hpp"

#include <algorithm>

#include "latcoh/weightfn.hpp"

namespace latcoh {

BadSetReport is_bad_set(const PlumbingGraph& g, const std::vector<int>& bar, int64_t cap) {
    require_qhs3(g);
    expect(cap >= 0, Err::BadInput, "negative search bound");
    std::vector<char> seen(static_cast<size_t>(g.size()), 0);
    for (int v : bar) {
        expect(v >= 0 && v < g.size(), Err::BadSubset, "subset vertex out of range");
        expect(!seen[static_cast<size_t>(v)], Err::BadSubset, "subset vertex repeated");
        seen[static_cast<size_t>(v)] = 1;
    }

    for (int64_t delta = 0; delta <= cap; delta = delta == 0 ? 1 : checked_mul(delta, 2)) {
        std::vector<Vertex> vs = g.vertices();
        for (int v : bar) {
            auto& e = vs[static_cast<size_t>(v)].e;
            e = checked_sub(e, delta);
        }
        PlumbingGraph h(std::move(vs), g.edges());
        if (is_rational(h)) return BadSetReport{true, delta};
        if (bar.empty()) break; // further decrements change nothing
    }
    return BadSetReport{false, cap};
}

TauSequence ar_tau(const PlumbingGraph& g, int v0, std::optional<int64_t> lmax_opt) {
    require_qhs3(g);
    expect(v0 >= 0 && v0 < g.size(), Err::BadSubset, "vertex index out of range");
    int64_t lmax = lmax_opt ? *lmax_opt : checked_add(default_bound(g)[static_cast<size_t>(v0)], 2);
    expect(lmax >= 1, Err::BadInput, "window must contain at least one step");

    TauSequence seq;
    seq.v0 = v0;
    seq.lmax = lmax;
    seq.cycles.reserve(static_cast<size_t>(lmax) + 1);
    seq.tau.reserve(static_cast<size_t>(lmax) + 1);
    seq.cycles.emplace_back(static_cast<size_t>(g.size()), 0);
    seq.tau.push_back(0);

    const std::vector<int> bar{v0};
    for (int64_t l = 0; l < lmax; ++l) {
        const Cycle& cur = seq.cycles.back();
        int64_t pairing = g.pair_with_vertex(cur, v0);
        Cycle seed = cur;
        seed[static_cast<size_t>(v0)] = checked_add(seed[static_cast<size_t>(v0)], 1);
        Cycle next = universal_cycle_from(g, bar, std::move(seed));
        for (int v = 0; v < g.size(); ++v)
            expect(next[static_cast<size_t>(v)] >= cur[static_cast<size_t>(v)], Err::Internal,
                   "universal cycles not monotone");
        int64_t t = checked_sub(checked_add(seq.tau.back(), 1), pairing);
        // Each closure step drops chi by (x,E_u)-1 >= 0, so t >= chi(next) always;
        // strict drop certifies that {v0} is not a valid reduction set.
        expect(t == chi(g, next), Err::BadInput,
               "vertex is not a one-element bad set: chi drops along the computation sequence");
        seq.cycles.push_back(std::move(next));
        seq.tau.push_back(t);
    }
    return seq;
}

ArRootEu ar_root_eu(const PlumbingGraph& g, int v0, std::optional<int64_t> lmax) {
    ArRootEu out;
    out.seq = ar_tau(g, v0, lmax);
    const auto& tau = out.seq.tau;
    const size_t m = tau.size();
    expect(tau[m - 2] <= tau[m - 1], Err::BadInput,
           "window too small: tau still decreasing at the end");
    out.eu = checked_sub(0, tau[0]);
    for (size_t i = 0; i + 1 < m; ++i)
        out.eu = checked_add(out.eu, std::max<int64_t>(0, checked_sub(tau[i], tau[i + 1])));
    out.root = root_from_tau(tau);
    return out;
}

} // namespace latcoh
