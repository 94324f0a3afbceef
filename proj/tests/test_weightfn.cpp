#include "doctest.h"
#include "latcoh/hilbert.hpp"
#include "latcoh/weightfn.hpp"
#include "test_support.hpp"

using namespace latcoh;
using namespace latcoh::testing;

TEST_CASE("topological weight is chi on the default rectangle") {
    auto g = star(-1, {-2, -3, -7});
    WeightTable w = top_weight(g);
    CHECK(w.t.rect() == Rect::box({2, 1, 1, 1})); // floor_+(Z_K) = (2,1,1,1)
    Point l = w.t.rect().lo();
    do {
        CHECK(w.t.at(l) == chi(g, l));
    } while (w.t.rect().next(l));
    CHECK(w.t.at({0, 0, 0, 0}) == 0);
    CHECK(w.t.at({2, 1, 1, 1}) == 0); // chi(Z_K) = 0
    CHECK(w.t.min_value() == 0);      // chi(Z_min) = 0 but Z_min is outside R(0, Z_K)

    // explicit bound
    WeightTable wb = top_weight(g, Cycle{6, 3, 2, 1});
    CHECK(wb.t.at({6, 3, 2, 1}) == 0); // chi(Z_min) = 0
    CHECK(wb.t.min_value() == 0);

    PlumbingGraph torus({{"a", -3, 1}}, std::vector<std::pair<int, int>>{});
    CHECK_ERR(top_weight(torus), Err::NotQHS3);
}

TEST_CASE("combinatorial weight from a hilbert pair") {
    HilbertTable h = make_hilbert(table2(2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}}));
    DualTable d = symmetric_dual(h);
    WeightTable w = combinatorial_weight(h, d);
    Rect r = h.t.rect();
    Point l = r.lo();
    do {
        CHECK(w.t.at(l) == h.t.at(l) + d.t.at(l) - d.t.at(r.lo()));
    } while (r.next(l));
    CHECK(w.t.values() == std::vector<int64_t>{0, 0, 0, 0, 1, 0, 0, 0, 0});

    CHECK_ERR(combinatorial_weight(h, make_dual(table1({1, 0}))), Err::ShapeMismatch);
}

TEST_CASE("reduced topological weight via universal cycles") {
    auto g = superiso();
    std::vector<int> nodes{g.index_of("n0"), g.index_of("n1")};
    WeightTable w = reduced_top_weight(g, nodes);
    CHECK(w.t.rect() == Rect::box({30, 34}));
    CHECK(w.t.at({0, 0}) == 0);
    CHECK(w.t.at({30, 34}) == 0);
    CHECK(w.t.min_value() == -5);

    // the 7 x 7 block around the center of symmetry, rows l2 = 20 down to 14
    const std::vector<std::vector<int64_t>> block = {
        {-2, -2, -3, -4, -4, -4, -5},
        {-2, -1, -2, -3, -3, -3, -4},
        {-3, -2, -2, -3, -3, -3, -4},
        {-3, -2, -2, -2, -2, -2, -3},
        {-4, -3, -3, -3, -2, -2, -3},
        {-4, -3, -3, -3, -2, -1, -2},
        {-5, -4, -4, -4, -3, -2, -2}};
    for (int64_t l1 = 12; l1 <= 18; ++l1)
        for (int64_t l2 = 14; l2 <= 20; ++l2)
            CHECK(w.t.at({l1, l2}) == block[size_t(20 - l2)][size_t(l1 - 12)]);

    // each value is chi of the universal cycle over that bar point
    for (Point l : {Point{0, 0}, Point{5, 7}, Point{12, 14}, Point{18, 20}, Point{30, 34}}) {
        Cycle full = universal_cycle(g, nodes, {l[0], l[1]});
        CHECK(w.t.at(l) == chi(g, full));
    }

    CHECK_ERR(reduced_top_weight(g, {}), Err::BadSubset);
    CHECK_ERR(reduced_top_weight(g, {0, 0}), Err::BadSubset);
}

TEST_CASE("reduced analytic weight subtracts the correction table") {
    Table h(Rect({2}, {5}), {1, 2, 2, 3});
    Table h1(Rect({2}, {5}), {1, 1, 0, 0});
    WeightTable w = reduced_an_weight(make_hilbert(h), h1);
    CHECK(w.t.values() == std::vector<int64_t>{0, 1, 2, 3});
    Table wrong(Rect::box({3}), {0, 0, 0, 0});
    CHECK_ERR(reduced_an_weight(make_hilbert(h), wrong), Err::ShapeMismatch);
}

TEST_CASE("default bound clamps the canonical cycle") {
    CHECK(default_bound(star(-2, {-5, -5, -5})) == Cycle{1, 0, 0, 0}); // Z_K = (9/7,6/7,...)
    CHECK(default_bound(two_cusps()) == Cycle{7, 14, 3, 14, 7, 5, 5});
    // Z_K = 0: bound degenerates to the origin, so the weight rectangle is one point
    CHECK(default_bound(e8()) == Cycle(8, 0));
    CHECK(top_weight(e8()).t.size() == 1);
}
