#include "latcoh/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latcoh {

HilbertTable make_hilbert(Table t) {
    const Rect& r = t.rect();
    Point p = r.lo();
    do {
        int64_t v = t.at(p);
        expect(v >= 0, Err::BadInput, "hilbert value negative at " + point_str(p));
        for (int a = 0; a < r.rank(); ++a) {
            if (p[a] == r.hi()[a]) continue;
            Point q = p;
            ++q[a];
            expect(t.at(q) >= v, Err::BadInput, "hilbert table decreasing at " + point_str(p));
        }
    } while (r.next(p));
    bool anchored = std::all_of(r.lo().begin(), r.lo().end(), [](int64_t x) { return x == 0; });
    if (anchored && r.count() > 0)
        expect(t.at(r.lo()) == 0, Err::BadInput, "hilbert table nonzero at the origin");
    return HilbertTable{std::move(t)};
}

DualTable make_dual(Table t) {
    const Rect& r = t.rect();
    Point p = r.lo();
    do {
        for (int a = 0; a < r.rank(); ++a) {
            if (p[a] == r.hi()[a]) continue;
            Point q = p;
            ++q[a];
            expect(t.at(q) <= t.at(p), Err::BadInput, "dual table increasing at " + point_str(p));
        }
    } while (r.next(p));
    return DualTable{std::move(t)};
}

GradedSpace make_graded(int rank, Point c, std::vector<GradedEntry> entries) {
    expect(rank >= 1, Err::BadInput, "graded space rank must be >= 1");
    expect(static_cast<int>(c.size()) == rank, Err::ShapeMismatch, "bound rank mismatch");
    for (int64_t cv : c) expect(cv >= 1, Err::BadInput, "bound c must be positive");
    std::sort(entries.begin(), entries.end(),
              [](const GradedEntry& a, const GradedEntry& b) { return a.deg < b.deg; });
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        expect(static_cast<int>(e.deg.size()) == rank, Err::ShapeMismatch,
               "degree rank mismatch at entry " + std::to_string(i));
        expect(e.dim > 0, Err::BadInput, "graded dimension must be positive");
        expect(i == 0 || entries[i - 1].deg != e.deg, Err::BadInput,
               "duplicate degree " + point_str(e.deg));
        bool below = false;
        for (int v = 0; v < rank; ++v) {
            expect(e.deg[v] >= 0, Err::BadInput, "negative degree " + point_str(e.deg));
            if (e.deg[v] < c[v]) below = true;
        }
        expect(below, Err::BadInput, "degree " + point_str(e.deg) + " is >= c");
    }
    return GradedSpace{rank, std::move(c), std::move(entries)};
}

int64_t total_dim(const GradedSpace& m) {
    int64_t d = 0;
    for (const auto& e : m.entries) d = checked_add(d, e.dim);
    return d;
}

HilbertTable hilbert_from_graded(const GradedSpace& m) {
    Rect r = Rect::box(m.c);
    Table t(r);
    Point l = r.lo();
    int64_t idx = 0;
    do {
        int64_t total = 0;
        for (const auto& e : m.entries) {
            bool above = true; // deg >= l componentwise
            for (int v = 0; v < m.rank; ++v)
                if (e.deg[v] < l[v]) {
                    above = false;
                    break;
                }
            if (!above) total = checked_add(total, e.dim);
        }
        t.at_index(idx++) = total;
    } while (r.next(l));
    return make_hilbert(std::move(t));
}

NewtonDiagram make_newton(int dim, std::vector<NewtonFace> faces) {
    expect(dim >= 1, Err::BadInput, "ambient dimension must be >= 1");
    expect(!faces.empty(), Err::BadInput, "diagram needs at least one face");
    for (const auto& f : faces) {
        expect(static_cast<int>(f.normal.size()) == dim, Err::ShapeMismatch,
               "normal rank mismatch");
        int64_t g = 0;
        for (int64_t x : f.normal) {
            expect(x > 0, Err::BadInput, "face normals must be positive");
            g = std::gcd(g, x);
        }
        expect(g == 1, Err::BadInput, "face normal not primitive");
    }
    return NewtonDiagram{dim, std::move(faces)};
}

NewtonDiagram newton_from_boundary_2d(const std::vector<Point>& vertices) {
    expect(vertices.size() >= 2, Err::BadInput, "need at least two boundary vertices");
    std::vector<NewtonFace> faces;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[i + 1];
        expect(a.size() == 2 && b.size() == 2, Err::ShapeMismatch, "boundary vertices must be 2-D");
        int64_t dx = b[0] - a[0];
        int64_t dy = b[1] - a[1];
        expect(dx > 0 && dy < 0, Err::BadInput,
               "boundary vertices must descend left to right (convex diagram)");
        int64_t g = std::gcd(dx, -dy);
        Point normal{-dy / g, dx / g}; // inward-positive normal of the segment
        int64_t m = checked_add(checked_mul(normal[0], a[0]), checked_mul(normal[1], a[1]));
        faces.push_back(NewtonFace{std::move(normal), m});
    }
    return make_newton(2, std::move(faces));
}

namespace {

int64_t dot(const Point& a, const Point& b) {
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

} // namespace

GradedSpace graded_from_newton(const NewtonDiagram& n) {
    const int dim = n.dim;
    const int rank = static_cast<int>(n.faces.size());
    Point ones(dim, 1);
    bool origin_under = false;
    int64_t box = 0;
    for (const auto& f : n.faces) {
        if (dot(f.normal, ones) <= f.m) origin_under = true;
        box = std::max(box, f.m);
    }
    expect(origin_under, Err::EmptySpace, "(1,...,1) is not under the diagram: the space is 0");

    Point c(rank);
    for (int i = 0; i < rank; ++i)
        c[i] = checked_add(checked_sub(n.faces[i].m, dot(n.faces[i].normal, ones)), 1);

    // Every coordinate of a base point is <= max m (normals have entries >= 1).
    std::map<Point, int64_t> dims;
    Rect scan(Point(dim, 1), Point(dim, box));
    Point p = scan.lo();
    do {
        bool under = false;
        for (const auto& f : n.faces)
            if (dot(f.normal, p) <= f.m) {
                under = true;
                break;
            }
        if (under) {
            Point deg(rank);
            for (int i = 0; i < rank; ++i)
                deg[i] = checked_sub(dot(n.faces[i].normal, p), dot(n.faces[i].normal, ones));
            dims[deg] = checked_add(dims[deg], 1);
        }
    } while (scan.next(p));

    std::vector<GradedEntry> entries;
    entries.reserve(dims.size());
    for (auto& [deg, dim_] : dims) entries.push_back(GradedEntry{deg, dim_});
    return make_graded(rank, std::move(c), std::move(entries));
}

PropertyReport check_properties(const HilbertTable& h, const DualTable& dual) {
    const Table& t = h.t;
    const Table& d = dual.t;
    expect(t.rect() == d.rect(), Err::ShapeMismatch, "hilbert/dual rectangles differ");
    const Rect& r = t.rect();
    const int s = r.rank();
    PropertyReport rep;

    // Matroid rank inequality: h(l1)+h(l2) >= h(min)+h(max), first violating pair.
    {
        Point l1 = r.lo();
        bool done = false;
        do {
            Point l2 = r.lo();
            do {
                if (checked_add(t.at(l1), t.at(l2)) <
                    checked_add(t.at(point_min(l1, l2)), t.at(point_max(l1, l2)))) {
                    rep.matroid = false;
                    rep.matroid_witness = {l1, l2};
                    done = true;
                    break;
                }
            } while (r.next(l2));
            if (done) break;
        } while (r.next(l1));
    }

    // Stability: h(l)=h(l+E_v) implies h(l+lbar)=h(l+lbar+E_v) for lbar >= 0.
    {
        Point l = r.lo();
        bool done = false;
        do {
            for (int v = 0; v < s && !done; ++v) {
                if (l[v] == r.hi()[v]) continue;
                Point lv = l;
                ++lv[v];
                if (t.at(lv) != t.at(l)) continue;
                Rect tail(l, r.hi());
                Point m = tail.lo();
                do {
                    if (m[v] == r.hi()[v]) continue;
                    Point mv = m;
                    ++mv[v];
                    if (t.at(mv) != t.at(m)) {
                        Point lbar(s);
                        for (int i = 0; i < s; ++i) lbar[i] = m[i] - l[i];
                        rep.stability = false;
                        rep.stability_witness = {l, v, lbar};
                        done = true;
                        break;
                    }
                } while (tail.next(m));
            }
            if (done) break;
        } while (r.next(l));
    }

    // CDP: no (l,v) with h jumping and the dual dropping simultaneously.
    {
        Point l = r.lo();
        bool done = false;
        do {
            for (int v = 0; v < s; ++v) {
                if (l[v] == r.hi()[v]) continue;
                Point lv = l;
                ++lv[v];
                if (t.at(lv) > t.at(l) && d.at(l) > d.at(lv)) {
                    rep.cdp = false;
                    rep.cdp_witness = {l, v};
                    done = true;
                    break;
                }
            }
            if (done) break;
        } while (r.next(l));
    }
    return rep;
}

DualTable symmetric_dual(const HilbertTable& h) {
    const Rect& r = h.t.rect();
    Table out(r);
    Point l = r.lo();
    int64_t idx = 0;
    do {
        Point rev(r.rank());
        for (int i = 0; i < r.rank(); ++i) rev[i] = r.lo()[i] + r.hi()[i] - l[i];
        out.at_index(idx++) = h.t.at(rev);
    } while (r.next(l));
    return make_dual(std::move(out));
}

SemigroupResult semigroup_from_hilbert(const HilbertTable& h) {
    const Rect& r = h.t.rect();
    const int s = r.rank();
    SemigroupResult res;
    Point l = r.lo();
    do {
        bool in = true;
        for (int v = 0; v < s && in; ++v) {
            if (l[v] == r.hi()[v]) continue; // vacuous direction at the boundary
            Point lv = l;
            ++lv[v];
            if (h.t.at(lv) <= h.t.at(l)) in = false;
        }
        if (in) res.points.push_back(l);
    } while (r.next(l));

    std::set<Point> member(res.points.begin(), res.points.end());
    for (int v = 0; v < s && res.duality_ok; ++v) {
        if (r.hi()[v] == r.lo()[v]) continue;
        Point cv = r.hi();
        --cv[v];
        if (member.count(cv)) res.duality_ok = false;
    }
    return res;
}

HilbertTable hilbert_from_semigroup(const std::vector<Point>& s, const Point& c) {
    Rect r = Rect::box(c);
    const int rank = r.rank();
    for (const auto& p : s)
        expect(r.contains(p), Err::BadInput, "semigroup point " + point_str(p) + " outside R(0,c)");

    // jump_v(l) = [exists s' in S with s' >= l and s'_v = l_v]
    auto jump = [&](const Point& l, int v) -> int64_t {
        for (const auto& sp : s) {
            if (sp[v] != l[v]) continue;
            bool ge = true;
            for (int i = 0; i < rank; ++i)
                if (sp[i] < l[i]) {
                    ge = false;
                    break;
                }
            if (ge) return 1;
        }
        return 0;
    };

    Table t(r);
    Point l = r.lo();
    r.next(l); // origin stays 0
    if (r.count() > 1) {
        do {
            std::optional<int64_t> value;
            for (int v = 0; v < rank; ++v) {
                if (l[v] == 0) continue;
                Point prev = l;
                --prev[v];
                int64_t via = checked_add(t.at(prev), jump(prev, v));
                if (!value) {
                    value = via;
                } else {
                    expect(*value == via, Err::NotUnitJump,
                           "inconsistent unit-jump reconstruction at " + point_str(l));
                }
            }
            t.at(l) = *value;
        } while (r.next(l));
    }
    return make_hilbert(std::move(t));
}

} // namespace latcoh
