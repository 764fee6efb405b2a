#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace troplift;
using testutil::Rng;

namespace {

ValuedSupport omega3() {
    return constant_support(3, {ivec({0, 0, 0}), ivec({0, 0, 1}), ivec({2, 1, 0}),
                                ivec({1, 0, 2})});
}

}  // namespace

TEST_CASE("initial supports") {
    ValuedSupport f = omega3();
    CHECK(initial_support(f, testutil::origin(3)).size() == 4);
    CHECK(initial_support(f, RatVec{Rat(1), Rat(0), Rat(0)}) ==
          std::vector<IntVec>{ivec({0, 0, 0}), ivec({0, 0, 1})});

    ValuedSupport sq;
    sq.dim = 2;
    sq.terms = {{ivec({0, 0}), Rat(0)},
                {ivec({1, 0}), Rat(0)},
                {ivec({0, 1}), Rat(0)},
                {ivec({1, 1}), Rat(1)}};
    CHECK(initial_support(sq, RatVec{Rat(-1), Rat(-1)}) ==
          std::vector<IntVec>{ivec({0, 1}), ivec({1, 0}), ivec({1, 1})});
}

TEST_CASE("Kapranov membership: on the hypersurface iff the min ties") {
    Rng rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        ValuedSupport f = testutil::random_support2(rng, 6, 4);
        TropCurve2 t = trop_curve2(f);
        for (const auto& v : t.complex.vertices) {
            CHECK(on_hypersurface(f, v));
            CHECK(initial_support_indices(f, v).size() >= 2);
        }
        RatVec far{Rat(1000003), Rat(999999)};
        // generic far point is almost surely off the curve; only assert
        // consistency of the two membership routes
        CHECK(on_hypersurface(f, far) == (initial_support_indices(f, far).size() >= 2));
    }
}

TEST_CASE("tropical line") {
    ValuedSupport f = constant_support(2, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})});
    TropCurve2 t = trop_curve2(f);
    REQUIRE(t.complex.vertices.size() == 1);
    CHECK(t.complex.vertices[0] == testutil::origin(2));
    CHECK(star_at(t.complex, testutil::origin(2)) == testutil::standard_line_fan());
}

TEST_CASE("the four-term fan of the worked example") {
    ValuedSupport f = constant_support(2, {ivec({0, 0}), ivec({1, 0}), ivec({0, 3}), ivec({2, 1})});
    TropCurve2 t = trop_curve2(f);
    CHECK(star_at(t.complex, testutil::origin(2)) ==
          make_fan(2, {{ivec({1, 0}), 3},
                       {ivec({0, 1}), 1},
                       {ivec({-1, 1}), 1},
                       {ivec({-1, -1}), 2}}));
}

TEST_CASE("the standard plane in 3-space") {
    ValuedSupport f = constant_support(
        3, {ivec({0, 0, 0}), ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})});
    TropSurface3 s = trop_surface3(f);
    REQUIRE(s.vertices.size() == 1);
    CHECK(s.vertices[0] == testutil::origin(3));
    CHECK(s.edges.empty());
    REQUIRE(s.rays.size() == 4);
    std::vector<IntVec> dirs;
    for (const auto& r : s.rays) dirs.push_back(r.dir);
    std::sort(dirs.begin(), dirs.end());
    CHECK(dirs == std::vector<IntVec>{ivec({-1, -1, -1}), ivec({0, 0, 1}), ivec({0, 1, 0}),
                                      ivec({1, 0, 0})});
    CHECK(s.cells2.size() == 6);
    for (const auto& c : s.cells2) CHECK(c.weight == 1);
    CHECK(surface_balanced(s));
}

TEST_CASE("a valued surface with a bounded edge") {
    // lifting one vertex of the tetrahedron splits it into two cells
    ValuedSupport f = omega3();
    f.terms.push_back({ivec({1, 0, 0}), Rat(1)});
    TropSurface3 s = trop_surface3(f);
    CHECK(s.vertices.size() == s.dual.cells.size());
    CHECK(surface_balanced(s));
}

TEST_CASE("locate points against the Omega_3 surface") {
    ValuedSupport f = omega3();
    CHECK(locate_point(f, testutil::origin(3)) == PointClass::Vertex);
    CHECK(locate_point(f, RatVec{Rat(1), Rat(0), Rat(0)}) == PointClass::FacetInterior);
    CHECK(locate_point(f, RatVec{Rat(10), Rat(10), Rat(10)}) == PointClass::Outside);
    // an edge-interior point: on the curve star's bounded direction
    CHECK(locate_point(f, RatVec{Rat(1, 2), Rat(1, 2), Rat(0)}) == PointClass::EdgeInterior);

    ValuedSupport bad = constant_support(3, {ivec({0, 0, 0}), ivec({2, 0, 0}), ivec({0, 2, 0}),
                                             ivec({0, 0, 2})});
    CHECK_THROWS_WITH(locate_point(bad, testutil::origin(3)),
                      Catch::Matchers::ContainsSubstring("unimodularity"));
}

TEST_CASE("unimodular polynomials") {
    CHECK(is_unimodular_poly(omega3()));
    ValuedSupport two_delta =
        constant_support(2, {ivec({0, 0}), ivec({2, 0}), ivec({0, 2})});
    CHECK_FALSE(is_unimodular_poly(two_delta));
    ValuedSupport sq;
    sq.dim = 2;
    sq.terms = {{ivec({0, 0}), Rat(0)},
                {ivec({1, 0}), Rat(0)},
                {ivec({0, 1}), Rat(0)},
                {ivec({1, 1}), Rat(1)}};
    CHECK(is_unimodular_poly(sq));
}

TEST_CASE("plane curves are balanced at every vertex") {
    Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        ValuedSupport f = testutil::random_support2(rng, 8, 5);
        CHECK(curve_complex_balanced(trop_curve2(f)));
    }
}

TEST_CASE("surfaces are balanced around every edge") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        ValuedSupport f = testutil::random_support3_fulldim(rng, 6, 2);
        std::vector<Rat> heights;
        for (std::size_t i = 0; i < f.terms.size(); ++i) heights.push_back(Rat(rng.uint(0, 2)));
        ValuedSupport g = f;
        for (std::size_t i = 0; i < g.terms.size(); ++i) g.terms[i].second = heights[i];
        CHECK(surface_balanced(trop_surface3(g)));
    }
}

TEST_CASE("weights are the lattice lengths of dual edges") {
    // dual subdivision duality counts for the plane-curve case
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        ValuedSupport f = testutil::random_support2(rng, 7, 4);
        TropCurve2 t = trop_curve2(f);
        if (t.dual.cell_dim != 2) continue;
        // one trop vertex per 2-cell
        CHECK(t.complex.vertices.size() == t.dual.cells.size());
        // rays of the complex match hull boundary edges with their lengths
        std::map<IntVec, Int> hull_weight;
        for (const auto& e : polygon_edges(hull2(f.exponents())))
            hull_weight[e.inner_normal] += e.length;
        std::map<IntVec, Int> ray_weight;
        for (const auto& r : t.complex.rays) ray_weight[r.dir] += r.weight;
        CHECK(ray_weight == hull_weight);
    }
}

TEST_CASE("star of the restriction equals the star of the curve") {
    Rng rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        ValuedSupport f = testutil::random_support2(rng, 7, 4);
        TropCurve2 t = trop_curve2(f);
        std::vector<RatVec> samples = t.complex.vertices;
        for (const auto& r : t.complex.rays) {
            RatVec p = t.complex.vertices[r.base];
            samples.push_back(radd(p, to_rat(r.dir)));
        }
        for (const auto& w : samples) {
            WeightedFan1 lhs = star_curve_fan(initial_form_support(f, w), testutil::origin(2));
            WeightedFan1 rhs = star_at(t.complex, w);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("surface star rays match the complex at vertices") {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        ValuedSupport f = testutil::random_support3_fulldim(rng, 6, 2);
        TropSurface3 s = trop_surface3(f);
        if (!is_unimodular_poly(f)) continue;
        for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
            std::set<IntVec> from_complex;
            for (const auto& e : s.edges) {
                if (e.a == static_cast<int>(vi))
                    from_complex.insert(primitive_direction(rsub(s.vertices[e.b], s.vertices[vi])));
                if (e.b == static_cast<int>(vi))
                    from_complex.insert(primitive_direction(rsub(s.vertices[e.a], s.vertices[vi])));
            }
            for (const auto& r : s.rays)
                if (r.base == static_cast<int>(vi)) from_complex.insert(r.dir);
            PlaneFan star = star_plane_fan(f, s.vertices[vi]);
            std::set<IntVec> from_star(star.rays.begin(), star.rays.end());
            CHECK(from_complex == from_star);
        }
    }
}

TEST_CASE("segment and ray membership") {
    ValuedSupport f = omega3();
    CHECK(ray_on_hypersurface(f, testutil::origin(3), ivec({0, 0, 1})));
    CHECK(ray_on_hypersurface(f, testutil::origin(3), ivec({-1, -1, -1})));
    CHECK_FALSE(ray_on_hypersurface(f, testutil::origin(3), ivec({1, -1, 0})));
    CHECK(segment_on_hypersurface(f, testutil::origin(3), RatVec{Rat(3), Rat(3), Rat(0)}));
    CHECK_FALSE(
        segment_on_hypersurface(f, RatVec{Rat(1), Rat(0), Rat(0)}, RatVec{Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("monomials have empty hypersurfaces") {
    ValuedSupport f = constant_support(2, {ivec({3, 5})});
    TropCurve2 t = trop_curve2(f);
    CHECK(t.complex.vertices.empty());
    CHECK(t.complex.rays.empty());
}

TEST_CASE("collinear supports give parallel lines") {
    ValuedSupport f;
    f.dim = 2;
    f.terms = {{ivec({0, 0}), Rat(0)}, {ivec({1, 0}), Rat(0)}, {ivec({2, 0}), Rat(1)}};
    TropCurve2 t = trop_curve2(f);
    REQUIRE(t.complex.vertices.size() == 2);
    REQUIRE(t.complex.rays.size() == 4);
    CHECK(curve_complex_balanced(t));
    // the two lines sit at first coordinates 0 and -1
    std::set<Rat> xs;
    for (const auto& v : t.complex.vertices) xs.insert(v[0]);
    CHECK(xs == std::set<Rat>{Rat(-1), Rat(0)});
}
