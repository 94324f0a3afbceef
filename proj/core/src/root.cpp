#include "latcoh/root.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace latcoh {

void validate_root(const GradedRoot& r) {
    expect(r.level_count() >= 1, Err::BadInput, "root has no levels");
    for (int k = 0; k < r.level_count(); ++k) {
        expect(r.count(k) >= 1, Err::BadInput, "empty root level");
        for (int p : r.parent[static_cast<size_t>(k)]) {
            if (k == r.level_count() - 1) {
                expect(p == -1, Err::BadInput, "top-level vertex with a parent");
            } else {
                expect(p >= 0 && p < r.count(k + 1), Err::BadInput,
                       "root parent index out of range");
            }
        }
    }
    expect(r.count(r.level_count() - 1) == 1, Err::BadInput, "root top level must be one vertex");
}

namespace {

// Union-find over table indices with lex-least representative per class.
struct UnionFind {
    std::vector<int64_t> parent, size, rep;
    explicit UnionFind(int64_t n) : parent(n), size(n, 1), rep(n) {
        std::iota(parent.begin(), parent.end(), 0);
        std::iota(rep.begin(), rep.end(), 0);
    }
    int64_t find(int64_t x) {
        int64_t root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) x = std::exchange(parent[x], root);
        return root;
    }
    // Returns the surviving root, or -1 if already joined.
    int64_t unite(int64_t a, int64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return -1;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        rep[a] = std::min(rep[a], rep[b]);
        return a;
    }
};

} // namespace

GradedRoot graded_root_of(const WeightTable& w) {
    const Table& t = w.t;
    const Rect& r = t.rect();
    const int64_t n = t.size();
    const int s = r.rank();
    const int64_t lo = t.min_value();
    const int64_t hi = t.max_value();

    // Bucket the indices by weight (ascending index inside each bucket).
    std::vector<int64_t> start(static_cast<size_t>(hi - lo + 2), 0);
    for (int64_t i = 0; i < n; ++i) ++start[static_cast<size_t>(t.at_index(i) - lo + 1)];
    for (size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    std::vector<int64_t> order(static_cast<size_t>(n));
    {
        std::vector<int64_t> cursor(start.begin(), start.end() - 1);
        for (int64_t i = 0; i < n; ++i)
            order[static_cast<size_t>(cursor[static_cast<size_t>(t.at_index(i) - lo)]++)] = i;
    }

    UnionFind uf(n);
    std::vector<char> active(static_cast<size_t>(n), 0);
    std::set<int64_t> alive; // components alive now, keyed by lex-least member

    GradedRoot out;
    out.min_level = lo;
    std::vector<int64_t> prev_reps; // previous level's components, display order

    Point p(static_cast<size_t>(s));
    for (int64_t level = lo; level <= hi; ++level) {
        int64_t from = start[static_cast<size_t>(level - lo)];
        int64_t to = start[static_cast<size_t>(level - lo + 1)];
        for (int64_t k = from; k < to; ++k) {
            int64_t idx = order[static_cast<size_t>(k)];
            active[static_cast<size_t>(idx)] = 1;
            alive.insert(idx);
            p = r.point(idx);
            for (int a = 0; a < s; ++a) {
                for (int dir = -1; dir <= 1; dir += 2) {
                    int64_t coord = p[static_cast<size_t>(a)] + dir;
                    if (coord < r.lo()[static_cast<size_t>(a)] ||
                        coord > r.hi()[static_cast<size_t>(a)])
                        continue;
                    Point q = p;
                    q[static_cast<size_t>(a)] = coord;
                    int64_t nidx = r.index(q);
                    if (!active[static_cast<size_t>(nidx)]) continue;
                    int64_t ra = uf.find(idx);
                    int64_t rb = uf.find(nidx);
                    if (ra == rb) continue;
                    alive.erase(uf.rep[ra]);
                    alive.erase(uf.rep[rb]);
                    alive.insert(std::min(uf.rep[ra], uf.rep[rb]));
                    uf.unite(ra, rb);
                }
            }
        }
        // Snapshot this level, components in lex order of representative.
        std::map<int64_t, int> index; // current union-find root -> index
        std::vector<int64_t> reps;
        reps.reserve(alive.size());
        for (int64_t rep : alive) {
            index.emplace(uf.find(rep), static_cast<int>(reps.size()));
            reps.push_back(rep);
        }
        // Link the previous level while the union-find state still matches:
        // a representative stays a member of its component forever, so its
        // current find-root names the enclosing component one level up.
        if (level > lo) {
            std::vector<int> links;
            links.reserve(prev_reps.size());
            for (int64_t rep : prev_reps) {
                auto it = index.find(uf.find(rep));
                expect(it != index.end(), Err::Internal, "component lost between levels");
                links.push_back(it->second);
            }
            out.parent.push_back(std::move(links));
        }
        prev_reps = std::move(reps);
    }
    out.parent.emplace_back(prev_reps.size(), -1); // top level

    int levels = static_cast<int>(out.parent.size());

    // Store up to the stabilization level plus one.
    int stab = levels - 1;
    while (stab > 0 && out.parent[static_cast<size_t>(stab - 1)].size() == 1) --stab;
    int target = stab + 1; // one level above stabilization
    if (target < levels - 1) {
        out.parent.resize(static_cast<size_t>(target) + 1);
        for (int& p2 : out.parent[static_cast<size_t>(target)]) p2 = -1;
    } else if (target > levels - 1) {
        // Extend the implicit ray by one synthetic level.
        expect(out.parent.back().size() == 1, Err::Internal, "top level not a single vertex");
        out.parent.back()[0] = 0;
        out.parent.push_back({-1});
    }
    validate_root(out);
    return out;
}

GradedRoot root_from_tau(const std::vector<int64_t>& tau) {
    expect(!tau.empty(), Err::BadInput, "empty tau sequence");
    Table t(Rect::box(Point{static_cast<int64_t>(tau.size()) - 1}));
    for (size_t i = 0; i < tau.size(); ++i) t.at_index(static_cast<int64_t>(i)) = tau[i];
    return graded_root_of(WeightTable{std::move(t)});
}

UModule module_of_root(const GradedRoot& r) {
    validate_root(r);
    UModule m;
    m.parts.resize(1);
    m.min_w = r.top_level(); // lowered below by births

    // Elder rule bottom-up: birth of a vertex = min birth of its children,
    // ties to the lower child index; children without the elder title die.
    std::vector<std::vector<int64_t>> birth(static_cast<size_t>(r.level_count()));
    std::map<std::pair<int64_t, int64_t>, int64_t> pieces; // (start,len) -> mult
    for (int k = 0; k < r.level_count(); ++k) {
        birth[static_cast<size_t>(k)].assign(static_cast<size_t>(r.count(k)), r.level(k));
        if (k == 0) continue;
        // Group previous-level vertices by parent.
        std::vector<std::vector<int>> children(static_cast<size_t>(r.count(k)));
        for (int i = 0; i < r.count(k - 1); ++i)
            children[static_cast<size_t>(r.parent[static_cast<size_t>(k - 1)][static_cast<size_t>(i)])]
                .push_back(i);
        for (int v = 0; v < r.count(k); ++v) {
            const auto& ch = children[static_cast<size_t>(v)];
            if (ch.empty()) continue; // newborn leaf at this level
            int elder = ch[0];
            for (int c : ch)
                if (birth[static_cast<size_t>(k - 1)][static_cast<size_t>(c)] <
                    birth[static_cast<size_t>(k - 1)][static_cast<size_t>(elder)])
                    elder = c;
            for (int c : ch) {
                int64_t b = birth[static_cast<size_t>(k - 1)][static_cast<size_t>(c)];
                if (c == elder) {
                    birth[static_cast<size_t>(k)][static_cast<size_t>(v)] = b;
                } else {
                    ++pieces[{checked_mul(2, b), checked_sub(r.level(k), b)}];
                }
            }
        }
    }
    for (int v = 0; v < r.count(r.level_count() - 1); ++v) {
        int64_t b = birth[static_cast<size_t>(r.level_count() - 1)][static_cast<size_t>(v)];
        m.parts[0].tails.push_back(checked_mul(2, b));
        m.min_w = std::min(m.min_w, b);
    }
    std::sort(m.parts[0].tails.begin(), m.parts[0].tails.end());
    for (const auto& [key, mult] : pieces)
        m.parts[0].pieces.push_back(Piece{key.first, key.second, mult});
    return m;
}

namespace {

GradedRoot trimmed(GradedRoot r) {
    while (r.level_count() >= 2 && r.parent.back().size() == 1 &&
           r.parent[static_cast<size_t>(r.level_count() - 2)].size() == 1) {
        r.parent.pop_back();
        for (int& p : r.parent.back()) p = -1;
    }
    return r;
}

std::string canonical_string(const GradedRoot& r) {
    // AHU-style encoding bottom-up; children sorted by encoding.
    std::vector<std::vector<std::string>> enc(static_cast<size_t>(r.level_count()));
    for (int k = 0; k < r.level_count(); ++k) {
        std::vector<std::vector<std::string>> children(static_cast<size_t>(r.count(k)));
        if (k > 0)
            for (int i = 0; i < r.count(k - 1); ++i)
                children[static_cast<size_t>(
                             r.parent[static_cast<size_t>(k - 1)][static_cast<size_t>(i)])]
                    .push_back(enc[static_cast<size_t>(k - 1)][static_cast<size_t>(i)]);
        enc[static_cast<size_t>(k)].resize(static_cast<size_t>(r.count(k)));
        for (int v = 0; v < r.count(k); ++v) {
            auto& ch = children[static_cast<size_t>(v)];
            std::sort(ch.begin(), ch.end());
            std::string s = "(" + std::to_string(r.level(k));
            for (const auto& c : ch) s += c;
            s += ")";
            enc[static_cast<size_t>(k)][static_cast<size_t>(v)] = std::move(s);
        }
    }
    // Single vertex on the trimmed top level.
    std::string out;
    for (const auto& s : enc.back()) out += s;
    return out;
}

} // namespace

bool root_isomorphic(const GradedRoot& a, const GradedRoot& b) {
    validate_root(a);
    validate_root(b);
    return canonical_string(trimmed(a)) == canonical_string(trimmed(b));
}

std::string to_dot(const GradedRoot& r) {
    validate_root(r);
    std::string out = "digraph gradedroot {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int k = 0; k < r.level_count(); ++k) {
        out += "  { rank=same;";
        for (int v = 0; v < r.count(k); ++v)
            out += " L" + std::to_string(k) + "_" + std::to_string(v) + " [label=\"" +
                   std::to_string(r.level(k)) + "\"];";
        out += " }\n";
    }
    for (int k = 0; k + 1 < r.level_count(); ++k)
        for (int v = 0; v < r.count(k); ++v)
            out += "  L" + std::to_string(k) + "_" + std::to_string(v) + " -> L" +
                   std::to_string(k + 1) + "_" +
                   std::to_string(r.parent[static_cast<size_t>(k)][static_cast<size_t>(v)]) +
                   ";\n";
    out += "}\n";
    return out;
}

} // namespace latcoh
