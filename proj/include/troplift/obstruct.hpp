// Decision procedures for the lifting problem of tropical curves in
// unimodular tropical surfaces in R^3: support-based irreducibility
// classification, classical-line checks via projected-support fibers, the
// local verdict at a vertex or edge point (compare the curve star against
// the stable intersection with its spanning plane), a whole-curve scan,
// and the Vigeland family generator. The verdicts implement necessary
// conditions only: a passing test never certifies liftability.
#pragma once

#include <set>

#include "troplift/intersect.hpp"

namespace troplift {

enum class IrreducibilityKind { Irreducible, BinomialFactorOnly, Inconclusive };

// Which support-shape rule fired.
enum class SupportRule {
    SimplexSupport,        // <= 2n points, simplex hull, full affine span
    TriangleSupport,       // three non-collinear points in the plane
    QuadrilateralSupport,  // 4 points, quadrilateral hull, full affine span
    None
};

struct IrreducibilityClass {
    IrreducibilityKind kind = IrreducibilityKind::Inconclusive;
    SupportRule rule = SupportRule::None;
};

inline const char* to_string(IrreducibilityKind k) {
    switch (k) {
        case IrreducibilityKind::Irreducible: return "Irreducible";
        case IrreducibilityKind::BinomialFactorOnly: return "BinomialFactorOnly";
        case IrreducibilityKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline const char* to_string(SupportRule r) {
    switch (r) {
        case SupportRule::SimplexSupport: return "simplex-support rule";
        case SupportRule::TriangleSupport: return "triangle-support rule";
        case SupportRule::QuadrilateralSupport: return "quadrilateral-support rule";
        case SupportRule::None: return "no rule applicable";
    }
    return "?";
}

/// Classifies what the support shape alone says about factorizations of a
/// generic polynomial with that support.
inline IrreducibilityClass support_irreducibility(std::vector<IntVec> a, int n) {
    if (a.empty()) throw std::invalid_argument("empty support");
    if (n != 2 && n != 3) throw std::invalid_argument("dimension must be 2 or 3");
    for (const auto& p : a) check_same_dim(p.size(), static_cast<std::size_t>(n));
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw std::invalid_argument("support points must be distinct");

    bool hull_is_simplex = false, hull_is_quad = false;
    if (n == 2) {
        LatticePolygon h = hull2(a);
        hull_is_simplex = h.dim() == 2 && h.verts.size() == 3;
        hull_is_quad = h.dim() == 2 && h.verts.size() == 4;
    } else {
        Polytope3 h = hull3(a);
        hull_is_simplex = h.dim == 3 && h.vertices.size() == 4;
    }

    if (n == 2 && a.size() == 3 && hull_is_simplex)
        return {IrreducibilityKind::Irreducible, SupportRule::TriangleSupport};
    if (static_cast<int>(a.size()) <= 2 * n && hull_is_simplex && affine_span_is_full(a, n))
        return {IrreducibilityKind::Irreducible, SupportRule::SimplexSupport};
    if (n == 2 && a.size() == 4 && hull_is_quad && affine_span_is_full(a, n))
        return {IrreducibilityKind::BinomialFactorOnly, SupportRule::QuadrilateralSupport};
    return {IrreducibilityKind::Inconclusive, SupportRule::None};
}

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind { Obstructed, PassesLocalTest, EscapeClassicalSegment, NotApplicable };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Obstructed: return "Obstructed";
        case VerdictKind::PassesLocalTest: return "PassesLocalTest";
        case VerdictKind::EscapeClassicalSegment: return "EscapeClassicalSegment";
        case VerdictKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

struct Verdict {
    VerdictKind kind = VerdictKind::NotApplicable;
    std::string reason;
    Int multiple = 0;         // PassesLocalTest: the integral multiple k
    IntVec escape_direction;  // EscapeClassicalSegment: segment direction in R^3
    bool has_fans = false;    // fans below are filled for planar-star verdicts
    WeightedFan1 curve_star;  // in plane coordinates
    WeightedFan1 stable_fan;  // in the same coordinates
    std::optional<PlaneProjection> plane;  // the chart the fans live in
};

inline Verdict obstructed(std::string reason) {
    Verdict v;
    v.kind = VerdictKind::Obstructed;
    v.reason = std::move(reason);
    return v;
}

inline Verdict not_applicable(std::string reason) {
    Verdict v;
    v.kind = VerdictKind::NotApplicable;
    v.reason = std::move(reason);
    return v;
}

/// Lift test for a classical line of the given weight inside the surface:
/// the line through `base` with direction `dir` must lie on the surface
/// (else NotApplicable). Weight >= 2 obstructs outright; for weight 1 a
/// singleton fiber of the support under u -> u.dir obstructs.
inline Verdict classical_line_lift_check(const ValuedSupport& f, const IntVec& dir,
                                         const Int& weight, const RatVec& base) {
    validate_support(f);
    if (is_zero(dir)) throw std::invalid_argument("zero direction");
    if (weight < 1) throw std::invalid_argument("weight must be positive");
    IntVec d = primitive(dir);
    if (!line_on_hypersurface(f, base, d))
        return not_applicable("the line does not lie on the surface");
    if (weight >= 2)
        return obstructed("an irreducible and reduced lift of a line requires weight 1");
    FiberPartition fp = project_support(f.exponents(), IntMat{d});
    if (has_singleton_fiber(fp)) {
        for (const auto& [img, srcs] : fp.blocks)
            if (srcs.size() == 1)
                return obstructed("singleton fiber over " + to_string(img) +
                                  ": no torus translate in that direction sits inside the surface");
    }
    return not_applicable("no obstruction from this test");
}

inline Verdict classical_line_lift_check(const ValuedSupport& f, const IntVec& dir,
                                         const Int& weight) {
    return classical_line_lift_check(f, dir, weight, RatVec(f.dim, Rat(0)));
}

/// The local lifting verdict at w, a vertex or edge-interior point of a
/// unimodular surface: compare the curve star with the stable intersection
/// of the surface star and the plane the curve star spans.
inline Verdict lift_verdict_at_point(const ValuedSupport& f, const PolyhedralCurve& curve,
                                     const RatVec& w) {
    if (!is_unimodular_poly(f))
        throw std::invalid_argument("surface support is not unimodular");
    WeightedFan1 star3 = star_at(curve, w);
    if (star3.empty()) throw std::invalid_argument("point is not on the curve");

    PointClass cls = locate_point(f, w);
    if (cls == PointClass::Outside)
        return not_applicable("point is not on the surface");
    if (cls == PointClass::FacetInterior)
        return not_applicable("test point must be a vertex or an edge-interior point of the surface");

    ValuedSupport fw = initial_form_support(f, w);
    for (const auto& [d, wt] : star3.rays)
        if (!on_hypersurface(fw, to_rat(d)))
            return not_applicable("curve star leaves the surface star in direction " + to_string(d));

    IntMat dirs;
    for (const auto& [d, wt] : star3.rays) dirs.push_back(d);
    int rank = rat_rank_of_int(dirs);

    if (rank == 1) {
        if (!is_balanced(star3)) return not_applicable("curve star is unbalanced");
        const IntVec& u = star3.rays[0].first;
        return classical_line_lift_check(fw, u, star3.rays[0].second);
    }
    if (rank == 3) return not_applicable("curve star is not planar");

    // Planar star: build the plane's canonical chart.
    IntVec d1 = dirs[0], d2;
    bool found = false;
    for (std::size_t i = 1; i < dirs.size() && !found; ++i)
        if (!is_zero(cross3(d1, dirs[i]))) {
            d2 = dirs[i];
            found = true;
        }
    PlaneProjection proj = plane_projection(d1, d2);

    WeightedFan1 star2;
    star2.ambient_dim = 2;
    for (const auto& [d, wt] : star3.rays) {
        auto c = in_plane_coords(proj, d);
        if (!c) throw std::logic_error("planar star direction outside its plane lattice");
        star2.rays.emplace_back(*c, wt);
    }
    star2.canonicalize();

    StablePlaneFan stable = stable_intersection_with_plane(fw, proj);
    if (stable.image_hull_dim < 2) {
        Verdict v = not_applicable(
            "projected initial support is degenerate (hull dimension " +
            std::to_string(stable.image_hull_dim) +
            "); inconsistent with a planar curve star inside the surface");
        return v;
    }

    auto lines = classical_lines_in(stable.fan);
    if (!lines.empty()) {
        Verdict v;
        v.kind = VerdictKind::EscapeClassicalSegment;
        RatVec amb = from_plane_coords(proj, to_rat(lines.front()));
        v.escape_direction = primitive_direction(amb);
        v.reason = "stable intersection contains a weight-1 classical segment; the test is silent";
        v.has_fans = true;
        v.curve_star = star2;
        v.stable_fan = stable.fan;
        v.plane = proj;
        return v;
    }
    if (auto k = multiple_of(star2, stable.fan)) {
        Verdict v;
        v.kind = VerdictKind::PassesLocalTest;
        v.multiple = *k;
        v.has_fans = true;
        v.curve_star = star2;
        v.stable_fan = stable.fan;
        v.plane = proj;
        return v;
    }
    Verdict v = obstructed("curve star is not an integral multiple of the stable intersection");
    v.has_fans = true;
    v.curve_star = star2;
    v.stable_fan = stable.fan;
    v.plane = proj;
    return v;
}

// ---------------------------------------------------------------------------
// Whole-curve scan

struct GlobalVerdict {
    std::vector<std::pair<RatVec, Verdict>> points;
    VerdictKind overall = VerdictKind::NotApplicable;
};

namespace detail {

struct Seg {  // base + t*dir, t in [0,1] (bounded) or [0,inf)
    RatVec base;
    RatVec dir;
    bool bounded;
};

inline std::vector<Seg> curve_segments(const PolyhedralCurve& c) {
    std::vector<Seg> out;
    for (const auto& e : c.edges)
        out.push_back({c.vertices[e.a], rsub(c.vertices[e.b], c.vertices[e.a]), true});
    for (const auto& r : c.rays) out.push_back({c.vertices[r.base], to_rat(r.dir), false});
    return out;
}

inline std::vector<Seg> surface_segments(const TropSurface3& s) {
    std::vector<Seg> out;
    for (const auto& e : s.edges)
        out.push_back({s.vertices[e.a], rsub(s.vertices[e.b], s.vertices[e.a]), true});
    for (const auto& r : s.rays) out.push_back({s.vertices[r.base], to_rat(r.dir), false});
    return out;
}

inline bool param_ok(const Seg& s, const Rat& t) {
    if (t < 0) return false;
    return !s.bounded || t <= 1;
}

// Crossing points and overlap samples of two 1-cells in R^3.
inline void cell_meet_points(const Seg& a, const Seg& b, std::vector<RatVec>& out) {
    const std::size_t n = a.base.size();
    RatMat m(n, RatVec(2));
    RatVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][0] = a.dir[i];
        m[i][1] = -b.dir[i];
        rhs[i] = b.base[i] - a.base[i];
    }
    RatMat dirs{a.dir, b.dir};
    if (rat_rank(dirs) == 2) {
        auto x = rat_solve(m, rhs);
        if (!x) return;
        Rat t = (*x)[0], r = (*x)[1];
        for (std::size_t i = 0; i < n; ++i)
            if (t * a.dir[i] - r * b.dir[i] != rhs[i]) return;  // skew lines
        if (!param_ok(a, t) || !param_ok(b, r)) return;
        RatVec p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = a.base[i] + t * a.dir[i];
        out.push_back(p);
        return;
    }
    // Parallel: same line? Express b.base in a's parameter.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
        if (a.dir[i] != 0) { piv = i; break; }
    if (piv == n) return;
    Rat t0 = (b.base[piv] - a.base[piv]) / a.dir[piv];
    for (std::size_t i = 0; i < n; ++i)
        if (a.base[i] + t0 * a.dir[i] != b.base[i]) return;  // parallel, distinct
    Rat scale = b.dir[piv] / a.dir[piv];  // b(t) in a-parameter: t0 + scale*r
    // Overlap interval of [0, 1 or inf) and image of b's range.
    Rat lo = t0, hi = t0;
    bool hi_inf = !b.bounded && scale > 0;
    bool lo_inf = !b.bounded && scale < 0;
    if (b.bounded) {
        Rat t1 = t0 + scale;
        lo = std::min(t0, t1);
        hi = std::max(t0, t1);
    }
    if (!lo_inf) lo = std::max(lo, Rat(0));
    else lo = Rat(0);
    if (a.bounded) {
        if (hi_inf) { hi = Rat(1); hi_inf = false; }
        else hi = std::min(hi, Rat(1));
    }
    if (!hi_inf && lo > hi) return;
    Rat sample = hi_inf ? Rat(lo + 1) : Rat((lo + hi) / 2);
    RatVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = a.base[i] + sample * a.dir[i];
    out.push_back(p);
}

}  // namespace detail

/// Applies the local verdict at every candidate point: curve vertices,
/// crossings of the curve with the surface 1-skeleton, and one interior
/// sample per overlap of a curve edge with a surface edge. Points interior
/// to surface 2-cells come back NotApplicable by the local test itself.
inline GlobalVerdict lift_verdict_global(const ValuedSupport& f, const PolyhedralCurve& curve) {
    if (!is_unimodular_poly(f))
        throw std::invalid_argument("surface support is not unimodular");
    TropSurface3 surf = trop_surface3(f);

    std::set<RatVec> candidates;
    for (const auto& v : curve.vertices) candidates.insert(v);
    auto cseg = detail::curve_segments(curve);
    auto sseg = detail::surface_segments(surf);
    std::vector<RatVec> pts;
    for (const auto& a : cseg)
        for (const auto& b : sseg) detail::cell_meet_points(a, b, pts);
    for (const auto& p : pts) candidates.insert(p);

    GlobalVerdict out;
    for (const auto& w : candidates) {
        if (star_at(curve, w).empty()) continue;  // meet-point off the curve support
        out.points.emplace_back(w, lift_verdict_at_point(f, curve, w));
    }
    for (const auto& [w, v] : out.points)
        if (v.kind == VerdictKind::Obstructed) out.overall = VerdictKind::Obstructed;
    return out;
}

// ---------------------------------------------------------------------------
// The Vigeland family

struct VigelandInstance {
    Int delta;
    Rat a;
    ValuedSupport surface;   // vertices of the tetrahedron, zero valuations
    PolyhedralCurve curve;   // the three-valent line L_a
};

/// The degree-delta instance: surface support
/// {(0,0,0),(0,0,1),(delta-1,1,0),(1,0,delta-1)} with zero valuations and
/// the curve with vertices 0 and a(e1+e2), rays e3, -e1-e2-e3 at the first
/// and e1, e2 at the second, all weights 1. Containment of the curve in the
/// surface is verified at construction.
inline VigelandInstance vigeland_instance(const Int& delta, const Rat& a) {
    if (delta < 3) throw std::invalid_argument("delta must be at least 3");
    if (a <= 0) throw std::invalid_argument("a must be positive");
    VigelandInstance inst;
    inst.delta = delta;
    inst.a = a;
    inst.surface = constant_support(
        3, {ivec({0, 0, 0}), ivec({0, 0, 1}), IntVec{delta - 1, Int(1), Int(0)},
            IntVec{Int(1), Int(0), delta - 1}});
    PolyhedralCurve& c = inst.curve;
    c.ambient_dim = 3;
    c.vertices.push_back(RatVec{Rat(0), Rat(0), Rat(0)});
    c.vertices.push_back(RatVec{a, a, Rat(0)});
    c.edges.push_back({0, 1, Int(1)});
    c.rays.push_back({0, ivec({0, 0, 1}), Int(1)});
    c.rays.push_back({0, ivec({-1, -1, -1}), Int(1)});
    c.rays.push_back({1, ivec({1, 0, 0}), Int(1)});
    c.rays.push_back({1, ivec({0, 1, 0}), Int(1)});

    if (!segment_on_hypersurface(inst.surface, c.vertices[0], c.vertices[1]))
        throw std::logic_error("curve segment left the surface");
    for (const auto& r : c.rays)
        if (!ray_on_hypersurface(inst.surface, c.vertices[r.base], r.dir))
            throw std::logic_error("curve ray left the surface");
    return inst;
}

// ---------------------------------------------------------------------------
// Coordinate changes (verdicts are invariant under these; used by tests and
// the oracle double-runs)

inline IntMat unimodular_inverse(const IntMat& m) {
    Int det = int_det(m);
    if (det != 1 && det != -1) throw std::invalid_argument("matrix not unimodular");
    const std::size_t n = m.size();
    IntMat inv(n, IntVec(n));
    IntMat minor(n - 1, IntVec(n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            Int cof = int_det(minor);
            inv[j][i] = (((i + j) % 2 == 0) ? cof : -cof) * det;  // det = 1/det
        }
    return inv;
}

/// Coordinates change w -> M w on tropical space; exponents transform by
/// the inverse transpose.
inline ValuedSupport apply_unimodular(const ValuedSupport& f, const IntMat& m) {
    IntMat minv = unimodular_inverse(m);
    ValuedSupport g;
    g.dim = f.dim;
    for (const auto& [u, v] : f.terms) {
        IntVec nu(f.dim, Int(0));
        for (int i = 0; i < f.dim; ++i)
            for (int j = 0; j < f.dim; ++j) nu[i] += minv[j][i] * u[j];  // (M^-1)^T u
        g.terms.emplace_back(nu, v);
    }
    return g;
}

inline PolyhedralCurve apply_unimodular(const PolyhedralCurve& c, const IntMat& m) {
    PolyhedralCurve out = c;
    for (auto& v : out.vertices) {
        RatVec nv(v.size(), Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) nv[i] += Rat(m[i][j]) * v[j];
        v = nv;
    }
    for (auto& r : out.rays) {
        IntVec nd(r.dir.size(), Int(0));
        for (std::size_t i = 0; i < r.dir.size(); ++i)
            for (std::size_t j = 0; j < r.dir.size(); ++j) nd[i] += m[i][j] * r.dir[j];
        r.dir = primitive(nd);
    }
    return out;
}

inline PolyhedralCurve translate_curve(const PolyhedralCurve& c, const RatVec& t) {
    PolyhedralCurve out = c;
    for (auto& v : out.vertices) v = radd(v, t);
    return out;
}

/// Translating the surface by t shifts each valuation by -u.t.
inline ValuedSupport translate_surface(const ValuedSupport& f, const RatVec& t) {
    ValuedSupport g = f;
    for (auto& [u, v] : g.terms) v -= rdot(u, t);
    return g;
}

}  // namespace troplift
