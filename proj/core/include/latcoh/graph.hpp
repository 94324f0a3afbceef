#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcoh/rational.hpp"

namespace latcoh {

// Integral cycle l = sum l_v E_v, coefficients in declaration order.
using Cycle = std::vector<int64_t>;
// Rational cycle l' in the dual lattice.
using QCycle = std::vector<Rational>;

struct Vertex {
    std::string id;
    int64_t e = 0; // self-intersection (E_v, E_v)
    int64_t g = 0; // genus, >= 0
};

// Decorated plumbing graph. Vertices keep declaration order; that order is
// the canonical coordinate order for every cycle and table derived from the
// graph. Multi-edges are allowed, self-loops are not.
class PlumbingGraph {
  public:
    PlumbingGraph(std::vector<Vertex> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);
    // Internal constructor with resolved indices (used by blow_up and tests).
    PlumbingGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edge_indices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int index_of(const std::string& id) const; // UnknownSite if absent
    std::optional<int> find(const std::string& id) const;

    // Intersection form entry (E_u, E_v).
    int64_t form(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    int64_t pair(const Cycle& x, const Cycle& y) const;
    Rational pair(const QCycle& x, const QCycle& y) const;
    // (x, E_v) for integral x: the workhorse of the Laufer iterations.
    int64_t pair_with_vertex(const Cycle& x, int v) const;

    bool connected() const;

  private:
    void build_adjacency();

    std::vector<Vertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_; // with multiplicity: u appears once per edge
};

struct GraphReport {
    bool negative_definite = false;
    bool is_tree = false;
    bool all_genus_zero = false;
    bool qhs3_link = false;            // negative definite tree of genus-0 vertices
    int64_t group_order = 0;           // det(-I) = |L'/L| when negative definite
    bool numerically_gorenstein = false; // canonical cycle is integral
};

GraphReport check_graph(const PlumbingGraph& g);

// Anti-canonical solution of the adjunction relations (Z_K, E_v) = e_v + 2 - 2 g_v.
// Requires an invertible intersection form; denominators divide |det(I)|.
QCycle canonical_cycle(const PlumbingGraph& g);

// chi(l') = -(l', l' - Z_K) / 2.
Rational chi_q(const PlumbingGraph& g, const QCycle& l);
// Integral chi; throws NonIntegerChi if the rational value is not an integer
// (cannot happen for l in L, but guards mixed-lattice callers).
int64_t chi(const PlumbingGraph& g, const Cycle& l);

// Minimal nonzero cycle with (Z, E_v) <= 0 for all v (Lipman cone), computed
// by the Laufer iteration from E_0, adding the smallest-index violating E_u.
// Requires a connected, negative-definite graph.
Cycle fundamental_cycle(const PlumbingGraph& g);

// Artin: rational iff chi(Z_min) == 1.
bool is_rational(const PlumbingGraph& g);

// Universal cycle x(lbar): minimal x with x|_bar = lbar and (x, E_v) <= 0 for
// every v outside bar. bar lists vertex indices (duplicates rejected), lbar
// the prescribed coefficients (>= 0), aligned with bar.
Cycle universal_cycle(const PlumbingGraph& g, const std::vector<int>& bar, const Cycle& lbar);

// Laufer continuation: runs the same iteration starting from seed (whose
// bar-coordinates are kept fixed). Correct whenever seed <= x(seed|_bar),
// which holds for seed = x(l) + E_v in the incremental table fills.
Cycle universal_cycle_from(const PlumbingGraph& g, const std::vector<int>& bar, Cycle seed);

struct BlowUpResult {
    PlumbingGraph graph;
    int new_vertex = 0;      // index of the added (-1)-vertex
    int site_a = 0;          // blown-up vertex, or first endpoint for an edge site
    int site_b = -1;         // second endpoint for an edge site, -1 for a vertex site
};

// Blow up at a vertex ("v") or at an edge ("u", "v"). Vertex site: e_v drops
// by 1 and a new (-1)-vertex is attached to v. Edge site: one copy of the
// edge u-v is subdivided by the new (-1)-vertex and both endpoints drop by 1.
BlowUpResult blow_up(const PlumbingGraph& g, const std::string& site_a,
                     const std::optional<std::string>& site_b = std::nullopt);

// Pullback pi^*(x): coefficients are kept and the new vertex receives x_v
// (vertex site) or x_u + x_v (edge site). Satisfies (pi^* x, pi^* y) = (x, y).
Cycle pullback(const BlowUpResult& b, const Cycle& x);
QCycle pullback(const BlowUpResult& b, const QCycle& x);

// eu + (Z_K^2 + |V|) / 8.
Rational sw_normalized(const PlumbingGraph& g, int64_t eu);

// Componentwise max(floor(.), 0); the default rectangle bound for Z_K.
Cycle floor_positive(const QCycle& x);

} // namespace latcoh
