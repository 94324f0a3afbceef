#pragma once

#include <optional>

#include "latcoh/graph.hpp"
#include "latcoh/table.hpp"

namespace latcoh {

// Topological weight w = chi on R(0,c); default c = floor_+(Z_K).
WeightTable top_weight(const PlumbingGraph& g, std::optional<Cycle> c = std::nullopt);

// Combinatorial weight w(l) = h(l) + dual(l) - dual(lo).
WeightTable combinatorial_weight(const HilbertTable& h, const DualTable& dual);

// Reduced topological weight on the bar-coordinates: w(lbar) = chi(x(lbar)),
// x the universal cycle; default cbar = floor_+(Z_K) restricted to bar.
WeightTable reduced_top_weight(const PlumbingGraph& g, const std::vector<int>& bar,
                               std::optional<Cycle> cbar = std::nullopt);

// Reduced analytic weight w(lbar) = h(lbar) - h1(lbar); h1 is the user's
// h^1 data indexed over the same rectangle (increasing, so not a DualTable).
WeightTable reduced_an_weight(const HilbertTable& h, const Table& h1);

// The rectangle the default topological weight lives on.
Cycle default_bound(const PlumbingGraph& g);

void require_qhs3(const PlumbingGraph& g);

} // namespace latcoh
