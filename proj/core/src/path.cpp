#include "latcoh/path.hpp"

#include <algorithm>

#include "latcoh/root.hpp"

namespace latcoh {

LatticePath make_path(std::vector<Point> points) {
    expect(!points.empty(), Err::BadInput, "path has no points");
    const size_t s = points[0].size();
    expect(s >= 1, Err::BadInput, "path points have rank zero");
    bool increasing = true;
    for (size_t i = 0; i < points.size(); ++i) {
        expect(points[i].size() == s, Err::ShapeMismatch, "path points of mixed rank");
        if (i == 0) continue;
        int changed = 0;
        int64_t delta = 0;
        for (size_t a = 0; a < s; ++a) {
            int64_t d = checked_sub(points[i][a], points[i - 1][a]);
            if (d != 0) {
                ++changed;
                delta = d;
            }
        }
        expect(changed == 1 && (delta == 1 || delta == -1), Err::BadInput,
               "path step is not a unit step");
        if (delta < 0) increasing = false;
    }
    std::vector<Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Err::BadInput,
           "path revisits a point");
    return LatticePath{std::move(points), increasing};
}

PathEu eu_path(const WeightTable& w, const LatticePath& path) {
    const Rect& r = w.t.rect();
    for (const Point& p : path.points) {
        expect(p.size() == static_cast<size_t>(r.rank()), Err::ShapeMismatch,
               "path rank does not match the table");
        expect(r.contains(p), Err::PathOutOfRange,
               "path leaves the rectangle at " + point_str(p));
    }
    std::vector<int64_t> tau;
    tau.reserve(path.points.size());
    for (const Point& p : path.points) tau.push_back(w.t.at(p));

    int64_t eu = checked_sub(0, tau[0]);
    for (size_t i = 0; i + 1 < tau.size(); ++i)
        eu = checked_add(eu, std::max<int64_t>(0, checked_sub(tau[i], tau[i + 1])));

    PathEu out;
    out.eu = eu;
    out.module = module_of_root(root_from_tau(tau));
    expect(eu_of(out.module) == eu, Err::Internal, "path eu mismatch against its module");
    return out;
}

MinEuPath min_eu_increasing(const WeightTable& w) {
    const Table& t = w.t;
    const Rect& r = t.rect();
    const int s = r.rank();
    const int64_t n = t.size();

    // g(l) = cheapest total jump-down cost of an increasing path l -> hi.
    std::vector<int64_t> g(static_cast<size_t>(n), 0);
    Point p(static_cast<size_t>(s));
    for (int64_t i = n - 2; i >= 0; --i) {
        p = r.point(i);
        int64_t best = 0;
        bool first = true;
        for (int a = 0; a < s; ++a) {
            if (p[static_cast<size_t>(a)] == r.hi()[static_cast<size_t>(a)]) continue;
            int64_t j = i + r.stride(a);
            int64_t cand = checked_add(
                std::max<int64_t>(0, checked_sub(t.at_index(i), t.at_index(j))),
                g[static_cast<size_t>(j)]);
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
        g[static_cast<size_t>(i)] = best;
    }

    MinEuPath out;
    out.value = checked_add(checked_sub(0, t.at_index(0)), g[0]);

    // Walk forward taking the smallest direction that stays optimal.
    p = r.lo();
    int64_t i = 0;
    while (i != n - 1) {
        int64_t before = i;
        for (int a = 0; a < s; ++a) {
            if (p[static_cast<size_t>(a)] == r.hi()[static_cast<size_t>(a)]) continue;
            int64_t j = i + r.stride(a);
            int64_t cand = checked_add(
                std::max<int64_t>(0, checked_sub(t.at_index(i), t.at_index(j))),
                g[static_cast<size_t>(j)]);
            if (cand == g[static_cast<size_t>(i)]) {
                out.directions.push_back(a);
                ++p[static_cast<size_t>(a)];
                i = j;
                break;
            }
        }
        expect(i != before, Err::Internal, "optimal path reconstruction stalled");
    }
    return out;
}

} // namespace latcoh
