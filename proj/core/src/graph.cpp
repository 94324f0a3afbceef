#include "latcoh/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace latcoh {

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < size(); ++i) {
        const auto& id = vertices_[i].id;
        expect(!id.empty(), Err::BadInput, "vertex with empty id");
        expect(index.emplace(id, i).second, Err::DuplicateId, "duplicate vertex id '" + id + "'");
        expect(vertices_[i].g >= 0, Err::BadInput, "negative genus at '" + id + "'");
    }
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        expect(ia != index.end(), Err::DanglingEdge, "edge endpoint '" + a + "' is not a vertex");
        expect(ib != index.end(), Err::DanglingEdge, "edge endpoint '" + b + "' is not a vertex");
        expect(ia->second != ib->second, Err::BadInput, "self-loop at '" + a + "'");
        edges_.emplace_back(ia->second, ib->second);
    }
    build_adjacency();
}

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edge_indices)
    : vertices_(std::move(vertices)), edges_(std::move(edge_indices)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
        expect(!v.id.empty(), Err::BadInput, "vertex with empty id");
        expect(seen.insert(v.id).second, Err::DuplicateId, "duplicate vertex id '" + v.id + "'");
        expect(v.g >= 0, Err::BadInput, "negative genus at '" + v.id + "'");
    }
    for (const auto& [a, b] : edges_) {
        expect(a >= 0 && a < size() && b >= 0 && b < size(), Err::DanglingEdge, "edge index out of range");
        expect(a != b, Err::BadInput, "self-loop");
    }
    build_adjacency();
}

void PlumbingGraph::build_adjacency() {
    adjacency_.assign(vertices_.size(), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
}

int PlumbingGraph::index_of(const std::string& id) const {
    auto idx = find(id);
    expect(idx.has_value(), Err::UnknownSite, "unknown vertex '" + id + "'");
    return *idx;
}

std::optional<int> PlumbingGraph::find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    return std::nullopt;
}

int64_t PlumbingGraph::form(int u, int v) const {
    if (u == v) return vertices_[u].e;
    int64_t count = 0;
    for (int n : adjacency_[u])
        if (n == v) ++count;
    return count;
}

int64_t PlumbingGraph::pair(const Cycle& x, const Cycle& y) const {
    expect(static_cast<int>(x.size()) == size() && static_cast<int>(y.size()) == size(),
           Err::ShapeMismatch, "cycle length does not match vertex count");
    int64_t total = 0;
    for (int v = 0; v < size(); ++v)
        total = checked_add(total, checked_mul(x[v], checked_mul(vertices_[v].e, y[v])));
    for (const auto& [a, b] : edges_) {
        total = checked_add(total, checked_mul(x[a], y[b]));
        total = checked_add(total, checked_mul(x[b], y[a]));
    }
    return total;
}

Rational PlumbingGraph::pair(const QCycle& x, const QCycle& y) const {
    expect(static_cast<int>(x.size()) == size() && static_cast<int>(y.size()) == size(),
           Err::ShapeMismatch, "cycle length does not match vertex count");
    Rational total;
    for (int v = 0; v < size(); ++v)
        total += x[v] * Rational(vertices_[v].e) * y[v];
    for (const auto& [a, b] : edges_) {
        total += x[a] * y[b];
        total += x[b] * y[a];
    }
    return total;
}

int64_t PlumbingGraph::pair_with_vertex(const Cycle& x, int v) const {
    int64_t total = checked_mul(x[v], vertices_[v].e);
    for (int n : adjacency_[v]) total = checked_add(total, x[n]);
    return total;
}

bool PlumbingGraph::connected() const {
    if (size() == 0) return true;
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int n : adjacency_[v])
            if (!seen[n]) {
                seen[n] = 1;
                ++reached;
                stack.push_back(n);
            }
    }
    return reached == size();
}

namespace {

// Fraction-free Bareiss elimination. Returns the leading principal minors
// det(M_k), k = 1..s, or nullopt if a zero pivot is hit (some minor is zero,
// which already refutes definiteness).
std::optional<std::vector<int64_t>> leading_minors(std::vector<std::vector<int64_t>> m) {
    int n = static_cast<int>(m.size());
    std::vector<int64_t> minors;
    int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) return std::nullopt;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                int64_t t = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
                m[i][j] = t / prev; // exact division (Bareiss)
            }
        prev = m[k][k];
        minors.push_back(prev);
    }
    return minors;
}

// Determinant by Bareiss with row pivoting (handles singular/indefinite input).
int64_t determinant(std::vector<std::vector<int64_t>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int sign = 1;
    int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                int64_t t = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
                m[i][j] = t / prev;
            }
        prev = m[k][k];
    }
    return sign > 0 ? prev : checked_sub(0, prev);
}

std::vector<std::vector<int64_t>> intersection_matrix(const PlumbingGraph& g) {
    int n = g.size();
    std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
    for (int v = 0; v < n; ++v) m[v][v] = g.vertices()[v].e;
    for (const auto& [a, b] : g.edges()) {
        m[a][b] = checked_add(m[a][b], 1);
        m[b][a] = checked_add(m[b][a], 1);
    }
    return m;
}

bool negative_definite(const PlumbingGraph& g) {
    auto minors = leading_minors(intersection_matrix(g));
    if (!minors) return false;
    for (size_t k = 0; k < minors->size(); ++k) {
        bool positive = (*minors)[k] > 0;
        bool want_positive = (k % 2) == 1; // (-1)^(k+1) det_k+1 > 0
        if (positive != want_positive) return false;
    }
    return true;
}

// Exact rational linear solve of I z = rhs (partial pivoting on nonzero).
QCycle solve(const PlumbingGraph& g, const std::vector<Rational>& rhs) {
    int n = g.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rational(g.form(i, j));
        a[i][n] = rhs[i];
    }
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != Rational(0)) {
                pivot = i;
                break;
            }
        expect(pivot >= 0, Err::BadInput, "intersection form is singular");
        std::swap(a[pivot], a[k]);
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k] == Rational(0)) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    QCycle z(n);
    for (int i = 0; i < n; ++i) z[i] = a[i][n] / a[i][i];
    return z;
}

} // namespace

GraphReport check_graph(const PlumbingGraph& g) {
    GraphReport r;
    r.negative_definite = negative_definite(g);
    bool conn = g.connected();
    r.is_tree = conn && g.edges().size() + 1 == static_cast<size_t>(g.size());
    r.all_genus_zero = std::all_of(g.vertices().begin(), g.vertices().end(),
                                   [](const Vertex& v) { return v.g == 0; });
    r.qhs3_link = r.negative_definite && r.is_tree && r.all_genus_zero;
    // det(-I) = (-1)^s det(I)
    int64_t det = determinant(intersection_matrix(g));
    r.group_order = (g.size() % 2 == 0) ? det : checked_sub(0, det);
    if (det != 0) {
        QCycle zk = canonical_cycle(g);
        r.numerically_gorenstein = std::all_of(zk.begin(), zk.end(),
                                               [](const Rational& x) { return x.is_integer(); });
    }
    return r;
}

QCycle canonical_cycle(const PlumbingGraph& g) {
    std::vector<Rational> rhs(g.size());
    for (int v = 0; v < g.size(); ++v)
        rhs[v] = Rational(checked_sub(checked_add(g.vertices()[v].e, 2),
                                      checked_mul(2, g.vertices()[v].g)));
    QCycle zk = solve(g, rhs);
    // Denominators of L' classes divide the discriminant group order.
    int64_t det = determinant(intersection_matrix(g));
    int64_t order = det < 0 ? checked_sub(0, det) : det;
    for (const auto& x : zk)
        expect(order % x.den() == 0, Err::Internal, "canonical cycle denominator does not divide group order");
    return zk;
}

Rational chi_q(const PlumbingGraph& g, const QCycle& l) {
    QCycle zk = canonical_cycle(g);
    QCycle shifted(l.size());
    for (size_t i = 0; i < l.size(); ++i) shifted[i] = l[i] - zk[i];
    return -(g.pair(l, shifted)) / Rational(2);
}

int64_t chi(const PlumbingGraph& g, const Cycle& l) {
    QCycle ql(l.size());
    for (size_t i = 0; i < l.size(); ++i) ql[i] = Rational(l[i]);
    Rational value = chi_q(g, ql);
    expect(value.is_integer(), Err::NonIntegerChi, "chi value " + value.str() + " is not an integer");
    return value.num();
}

namespace {

void require_negative_definite(const PlumbingGraph& g) {
    expect(negative_definite(g), Err::NotNegativeDefinite, "intersection form is not negative definite");
}

// Core Laufer loop: repeatedly add E_v for the smallest-index v outside bar
// with (x, E_v) > 0. Terminates on negative-definite graphs and returns the
// minimal cycle above the seed with the prescribed bar-coordinates.
Cycle laufer(const PlumbingGraph& g, const std::vector<char>& in_bar, Cycle x) {
    // Incremental pairing values: products[v] = (x, E_v).
    std::vector<int64_t> products(g.size());
    for (int v = 0; v < g.size(); ++v) products[v] = g.pair_with_vertex(x, v);
    for (;;) {
        int add = -1;
        for (int v = 0; v < g.size(); ++v)
            if (!in_bar[v] && products[v] > 0) {
                add = v;
                break;
            }
        if (add < 0) return x;
        x[add] = checked_add(x[add], 1);
        products[add] = checked_add(products[add], g.vertices()[add].e);
        for (int n : g.neighbors(add)) products[n] = checked_add(products[n], 1);
    }
}

} // namespace

Cycle fundamental_cycle(const PlumbingGraph& g) {
    expect(g.size() > 0, Err::BadInput, "empty graph");
    expect(g.connected(), Err::NotConnected, "fundamental cycle requires a connected graph");
    require_negative_definite(g);
    std::vector<char> in_bar(g.size(), 0);
    Cycle x(g.size(), 0);
    x[0] = 1;
    return laufer(g, in_bar, std::move(x));
}

bool is_rational(const PlumbingGraph& g) { return chi(g, fundamental_cycle(g)) == 1; }

Cycle universal_cycle(const PlumbingGraph& g, const std::vector<int>& bar, const Cycle& lbar) {
    expect(bar.size() == lbar.size(), Err::BadSubset, "subset and coefficient lengths differ");
    Cycle seed(g.size(), 0);
    std::vector<char> seen(g.size(), 0);
    for (size_t i = 0; i < bar.size(); ++i) {
        int v = bar[i];
        expect(v >= 0 && v < g.size(), Err::BadSubset, "subset vertex index out of range");
        expect(!seen[v], Err::BadSubset, "duplicate vertex in subset");
        expect(lbar[i] >= 0, Err::BadInput, "universal cycle coefficients must be >= 0");
        seen[v] = 1;
        seed[v] = lbar[i];
    }
    return universal_cycle_from(g, bar, std::move(seed));
}

Cycle universal_cycle_from(const PlumbingGraph& g, const std::vector<int>& bar, Cycle seed) {
    require_negative_definite(g);
    std::vector<char> in_bar(g.size(), 0);
    for (int v : bar) {
        expect(v >= 0 && v < g.size(), Err::BadSubset, "subset vertex index out of range");
        in_bar[v] = 1;
    }
    return laufer(g, in_bar, std::move(seed));
}

BlowUpResult blow_up(const PlumbingGraph& g, const std::string& site_a,
                     const std::optional<std::string>& site_b) {
    int a = g.index_of(site_a);
    std::vector<Vertex> vertices = g.vertices();
    std::vector<std::pair<int, int>> edges = g.edges();

    // Fresh id: smallest "b<k>" not in use.
    std::string new_id;
    for (int k = 0;; ++k) {
        new_id = "b" + std::to_string(k);
        if (!g.find(new_id)) break;
    }
    int fresh = static_cast<int>(vertices.size());

    BlowUpResult result{PlumbingGraph({}, std::vector<std::pair<int, int>>{}), fresh, a, -1};
    if (!site_b) {
        vertices[a].e = checked_sub(vertices[a].e, 1);
        vertices.push_back(Vertex{new_id, -1, 0});
        edges.emplace_back(a, fresh);
    } else {
        int b = g.index_of(*site_b);
        expect(a != b, Err::UnknownSite, "edge site endpoints coincide");
        auto hit = std::find_if(edges.begin(), edges.end(), [&](const std::pair<int, int>& e) {
            return (e.first == a && e.second == b) || (e.first == b && e.second == a);
        });
        expect(hit != edges.end(), Err::UnknownSite,
               "no edge between '" + site_a + "' and '" + *site_b + "'");
        edges.erase(hit);
        vertices[a].e = checked_sub(vertices[a].e, 1);
        vertices[b].e = checked_sub(vertices[b].e, 1);
        vertices.push_back(Vertex{new_id, -1, 0});
        edges.emplace_back(a, fresh);
        edges.emplace_back(fresh, b);
        result.site_b = b;
    }
    result.graph = PlumbingGraph(std::move(vertices), std::move(edges));
    return result;
}

Cycle pullback(const BlowUpResult& b, const Cycle& x) {
    Cycle y = x;
    int64_t extra = b.site_b < 0 ? x[b.site_a] : checked_add(x[b.site_a], x[b.site_b]);
    y.insert(y.begin() + b.new_vertex, extra);
    return y;
}

QCycle pullback(const BlowUpResult& b, const QCycle& x) {
    QCycle y = x;
    Rational extra = b.site_b < 0 ? x[b.site_a] : x[b.site_a] + x[b.site_b];
    y.insert(y.begin() + b.new_vertex, extra);
    return y;
}

Rational sw_normalized(const PlumbingGraph& g, int64_t eu) {
    expect(check_graph(g).qhs3_link, Err::NotQHS3,
           "normalized sw requires a negative-definite genus-0 tree");
    QCycle zk = canonical_cycle(g);
    Rational zk2 = g.pair(zk, zk);
    return Rational(eu) + (zk2 + Rational(g.size())) / Rational(8);
}

Cycle floor_positive(const QCycle& x) {
    Cycle out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = std::max<int64_t>(x[i].floor(), 0);
    return out;
}

} // namespace latcoh
