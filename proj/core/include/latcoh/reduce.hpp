#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcoh/graph.hpp"
#include "latcoh/root.hpp"

namespace latcoh {

// Whether deepening the self-intersections on a vertex subset makes the
// graph rational for some decrement delta in {0, 1, 2, 4, ...} up to cap.
struct BadSetReport {
    bool yes = false;
    int64_t delta = 0; // first working decrement, or the cap when none worked
};

BadSetReport is_bad_set(const PlumbingGraph& g, const std::vector<int>& bar,
                        int64_t cap = 1024);

// Counting function tau of the one-vertex reduction along v0, together with
// the universal cycles x(0), ..., x(lmax) realizing it.
struct TauSequence {
    int v0 = 0;
    int64_t lmax = 0;
    std::vector<Cycle> cycles; // lmax + 1 entries, cycles[l] = x(l)
    std::vector<int64_t> tau;  // lmax + 1 entries, tau[l] = chi(x(l))
};

TauSequence ar_tau(const PlumbingGraph& g, int v0,
                   std::optional<int64_t> lmax = std::nullopt);

// Graded root of the tau sequence and the Euler characteristic it carries.
struct ArRootEu {
    GradedRoot root;
    int64_t eu = 0;
    TauSequence seq;
};

ArRootEu ar_root_eu(const PlumbingGraph& g, int v0,
                    std::optional<int64_t> lmax = std::nullopt);

} // namespace latcoh
