#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace troplift;
using testutil::Rng;

namespace {

PolyhedralCurve vigeland_curve(const Rat& a) {
    return vigeland_instance(3, a).curve;
}

}  // namespace

TEST_CASE("balancing") {
    CHECK(is_balanced(testutil::standard_line_fan()));
    CHECK(is_balanced(make_fan(2, {{ivec({1, 0}), 3},
                                   {ivec({0, 1}), 1},
                                   {ivec({-1, 1}), 1},
                                   {ivec({-1, -1}), 2}})));
    CHECK_FALSE(is_balanced(make_fan(2, {{ivec({1, 0}), 1}, {ivec({0, 1}), 1}})));
}

TEST_CASE("stars of the Vigeland curve") {
    PolyhedralCurve c = vigeland_curve(Rat(1));
    WeightedFan1 at0 = star_at(c, testutil::origin(3));
    CHECK(at0 == make_fan(3, {{ivec({0, 0, 1}), 1},
                              {ivec({-1, -1, -1}), 1},
                              {ivec({1, 1, 0}), 1}}));
    WeightedFan1 at_a = star_at(c, RatVec{Rat(1), Rat(1), Rat(0)});
    CHECK(at_a == make_fan(3, {{ivec({-1, -1, 0}), 1},
                               {ivec({1, 0, 0}), 1},
                               {ivec({0, 1, 0}), 1}}));
    WeightedFan1 mid = star_at(c, RatVec{Rat(1, 2), Rat(1, 2), Rat(0)});
    CHECK(mid == make_fan(3, {{ivec({1, 1, 0}), 1}, {ivec({-1, -1, 0}), 1}}));
    CHECK(star_at(c, RatVec{Rat(5), Rat(7), Rat(11)}).empty());
}

TEST_CASE("cycle sums") {
    WeightedFan1 line = testutil::standard_line_fan();
    WeightedFan1 doubled = cycle_sum(line, line);
    CHECK(doubled == make_fan(2, {{ivec({1, 0}), 2}, {ivec({0, 1}), 2}, {ivec({-1, -1}), 2}}));

    WeightedFan1 vertical = make_fan(2, {{ivec({1, 0}), 2}, {ivec({-1, 0}), 2}});
    WeightedFan1 sum = cycle_sum(line, vertical);
    CHECK(sum == make_fan(2, {{ivec({1, 0}), 3},
                              {ivec({0, 1}), 1},
                              {ivec({-1, 0}), 2},
                              {ivec({-1, -1}), 1}}));
    // cross-check: this equals the fan of the product support
    ValuedSupport g = constant_support(2, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1}), ivec({0, 2}),
                                           ivec({1, 2}), ivec({0, 3})});
    TropCurve2 t = trop_curve2(g);
    CHECK(star_at(t.complex, testutil::origin(2)) == sum);

    CHECK(cycle_sum(line, WeightedFan1{2, {}}) == line);
}

TEST_CASE("cycle sum preserves balancing; summand property") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        WeightedFan1 a = polygon_normal_fan(testutil::random_polygon(rng, rng.uniform(3, 6), 5));
        WeightedFan1 b = polygon_normal_fan(testutil::random_polygon(rng, rng.uniform(3, 6), 5));
        WeightedFan1 s = cycle_sum(a, b);
        CHECK(is_balanced(s));
        CHECK(is_cycle_summand(a, s));
        CHECK(is_cycle_summand(b, s));
    }
}

TEST_CASE("cycle summands of the four-term fan") {
    WeightedFan1 four = make_fan(2, {{ivec({1, 0}), 3},
                                     {ivec({0, 1}), 1},
                                     {ivec({-1, 1}), 1},
                                     {ivec({-1, -1}), 2}});
    CHECK(is_cycle_summand(testutil::standard_line_fan(), four));
    CHECK(is_cycle_summand(four, four));
    CHECK_FALSE(is_cycle_summand(make_fan(2, {{ivec({1, 0}), 1}, {ivec({-1, 0}), 1}}), four));
    CHECK_THROWS_AS(is_cycle_summand(make_fan(2, {{ivec({1, 0}), 1}}), four),
                    std::invalid_argument);
}

TEST_CASE("classical lines in fans") {
    WeightedFan1 four = make_fan(2, {{ivec({1, 0}), 3},
                                     {ivec({0, 1}), 1},
                                     {ivec({-1, 1}), 1},
                                     {ivec({-1, -1}), 2}});
    CHECK(classical_lines_in(four).empty());

    WeightedFan1 gfan = make_fan(2, {{ivec({1, 0}), 3},
                                     {ivec({0, 1}), 1},
                                     {ivec({-1, 0}), 2},
                                     {ivec({-1, -1}), 1}});
    CHECK(classical_lines_in(gfan) == std::vector<IntVec>{ivec({1, 0})});

    WeightedFan1 seg = make_fan(2, {{ivec({1, 1}), 2}, {ivec({-1, -1}), 3}});
    CHECK(classical_lines_in(seg) == std::vector<IntVec>{ivec({1, 1})});
}

TEST_CASE("classical lines correspond to parallel polygon edges") {
    Rng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        LatticePolygon p = testutil::random_polygon(rng, rng.uniform(3, 7), 5);
        WeightedFan1 f = polygon_normal_fan(p);
        CHECK(is_balanced(f));
        bool parallel = false;
        auto edges = polygon_edges(p);
        for (std::size_t i = 0; i < edges.size() && !parallel; ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (edges[i].direction == neg(edges[j].direction)) {
                    parallel = true;
                    break;
                }
        CHECK(classical_lines_in(f).empty() == !parallel);
    }
}

TEST_CASE("contains_line_direction on the standard plane") {
    ValuedSupport f = constant_support(
        3, {ivec({0, 0, 0}), ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})});
    PlaneFan plane = star_plane_fan(f, testutil::origin(3));
    CHECK(contains_line_direction(plane, ivec({1, 1, 0})));
    CHECK(contains_line_direction(plane, ivec({0, 1, 1})));
    CHECK(contains_line_direction(plane, ivec({1, 0, 1})));
    CHECK_FALSE(contains_line_direction(plane, ivec({1, 0, 0})));
    CHECK_THROWS_AS(contains_line_direction(plane, ivec({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("integral multiples") {
    WeightedFan1 line = testutil::standard_line_fan();
    CHECK(multiple_of(line, line) == Int(1));
    CHECK(multiple_of(cycle_sum(line, line), line) == Int(2));
    WeightedFan1 vig = make_fan(2, {{ivec({0, 1}), 1},
                                    {ivec({-1, 1}), 1},
                                    {ivec({-1, -1}), 2},
                                    {ivec({1, 0}), 3}});
    CHECK_FALSE(multiple_of(line, vig).has_value());
}

TEST_CASE("multiple_of is invertible only at k = 1") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        WeightedFan1 b = polygon_normal_fan(testutil::random_polygon(rng, rng.uniform(3, 5), 4));
        Int k = rng.uint(1, 4);
        WeightedFan1 a = b;
        for (auto& [d, w] : a.rays) w *= k;
        REQUIRE(multiple_of(a, b) == k);
        if (k == 1)
            CHECK(multiple_of(b, a) == Int(1));
        else
            CHECK_FALSE(multiple_of(b, a).has_value());
    }
}

TEST_CASE("star commutes with cycle sum") {
    Rng rng(6060);
    for (int trial = 0; trial < 40; ++trial) {
        WeightedFan1 a = polygon_normal_fan(testutil::random_polygon(rng, rng.uniform(3, 5), 4));
        WeightedFan1 b = polygon_normal_fan(testutil::random_polygon(rng, rng.uniform(3, 5), 4));
        PolyhedralCurve ca = curve_of_fan(a, testutil::origin(2));
        PolyhedralCurve cb = curve_of_fan(b, testutil::origin(2));
        PolyhedralCurve csum = curve_of_fan(cycle_sum(a, b), testutil::origin(2));
        // sample a point on a ray of a (possibly shared with b)
        const IntVec& d = a.rays[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(a.rays.size()) - 1))].first;
        RatVec w{Rat(d[0]), Rat(d[1])};
        CHECK(star_at(csum, w) == cycle_sum(star_at(ca, w), star_at(cb, w)));
    }
}

TEST_CASE("curve validation reports unbalanced vertices") {
    PolyhedralCurve c;
    c.ambient_dim = 3;
    c.vertices.push_back(testutil::origin(3));
    c.rays.push_back({0, ivec({1, 0, 0}), 1});
    auto diag = validate_curve(c);
    REQUIRE(diag.has_value());
    CHECK(diag->find("unbalanced") != std::string::npos);
    CHECK_FALSE(validate_curve(vigeland_curve(Rat(2, 3))).has_value());
}
