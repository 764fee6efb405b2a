// Projections of supports along rational subspaces, fiber analysis, and
// stable intersections. Stable intersections are computed two independent
// ways: from the projected support's normal fan, and from the definition
// as a limit of generically translated transverse intersections. The
// perturbation vector is certified generic, not assumed; draws come from a
// seeded generator so runs are reproducible.
#pragma once

#include <random>

#include "troplift/hypersurface.hpp"

namespace troplift {

struct FiberPartition {
    // image point -> source exponents mapping there; sorted by image
    std::vector<std::pair<IntVec, std::vector<IntVec>>> blocks;
};

/// Groups the support by image under an integer projection matrix.
inline FiberPartition project_support(const std::vector<IntVec>& a, const IntMat& proj) {
    std::map<IntVec, std::vector<IntVec>> m;
    for (const auto& u : a) {
        IntVec img(proj.size());
        for (std::size_t r = 0; r < proj.size(); ++r) img[r] = dot(proj[r], u);
        m[img].push_back(u);
    }
    FiberPartition fp;
    for (auto& [img, srcs] : m) {
        std::sort(srcs.begin(), srcs.end());
        fp.blocks.emplace_back(img, srcs);
    }
    return fp;
}

inline FiberPartition project_support(const std::vector<IntVec>& a, const PlaneProjection& p) {
    return project_support(a, p.matrix);
}

inline bool has_singleton_fiber(const FiberPartition& fp) {
    for (const auto& [img, srcs] : fp.blocks)
        if (srcs.size() == 1) return true;
    return false;
}

inline bool is_injective_on_support(const FiberPartition& fp) {
    for (const auto& [img, srcs] : fp.blocks)
        if (srcs.size() != 1) return false;
    return true;
}

/// m_F * m_G * [Z^n : span(F) + span(G)]; errors when the combined span is
/// not full rank.
inline Int transverse_multiplicity(const std::vector<IntVec>& span_f,
                                   const std::vector<IntVec>& span_g, const Int& mf,
                                   const Int& mg) {
    std::vector<IntVec> all = span_f;
    all.insert(all.end(), span_g.begin(), span_g.end());
    auto idx = sublattice_index(all);
    if (!idx) throw std::invalid_argument("combined span is rank deficient");
    return mf * mg * *idx;
}

struct StablePlaneFan {
    WeightedFan1 fan;            // in the plane's lattice basis coordinates
    std::vector<IntVec> image;   // deduplicated projected support
    int image_hull_dim = 0;
    std::optional<std::string> diagnostic;
};

/// Stable intersection of a constant-coefficient surface with the plane of
/// a PlaneProjection: the weighted normal fan skeleton of the projected
/// support's hull, expressed in the plane basis.
inline StablePlaneFan stable_intersection_with_plane(const ValuedSupport& f,
                                                     const PlaneProjection& proj) {
    validate_support(f);
    if (f.dim != 3) throw std::invalid_argument("surface support must live in Z^3");
    for (const auto& [u, v] : f.terms)
        if (v != f.terms.front().second)
            throw std::invalid_argument("stable fan needs constant valuations");
    StablePlaneFan out;
    for (const auto& [u, v] : f.terms) out.image.push_back(proj.apply(u));
    std::sort(out.image.begin(), out.image.end());
    out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
    LatticePolygon hull = hull2(out.image);
    out.image_hull_dim = hull.dim();
    out.fan.ambient_dim = 2;
    if (hull.dim() == 0) {
        out.diagnostic = "projected support is a single point (plane in generic position misses the fan)";
        return out;
    }
    out.fan = polygon_normal_fan(hull);
    return out;
}

// ---------------------------------------------------------------------------
// Perturbation route

struct PerturbRng {
    std::mt19937_64 eng;
    explicit PerturbRng(std::uint64_t seed) : eng(seed) {}
    Int small_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return Int(d(eng));
    }
    IntVec vec(int dim, int bound) {
        IntVec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = small_int(-bound, bound);
        return v;
    }
};

namespace detail {

struct ConeContrib {
    std::map<IntVec, Int> rays;  // limit direction (plane coords) -> weight
    bool ok = true;
    std::string witness;
};

// One perturbed pass for the surface-fan x plane case: since both are
// cones, X cap (U + sv) = s (X cap (U + v)) and the Hausdorff limit is the
// recession of the slice at v.
inline ConeContrib surface_plane_pass(const std::vector<std::pair<IntMat, Int>>& cones,
                                      const PlaneProjection& proj, const IntVec& v) {
    ConeContrib out;
    const IntVec& n_u = proj.kernel_basis[0];
    if (dot(n_u, v) == 0) {
        out.ok = false;
        out.witness = "perturbation vector lies in the plane";
        return out;
    }
    for (const auto& [gens, weight] : cones) {
        const IntVec& g1 = gens[0];
        const IntVec& g2 = gens[1];
        IntVec n_w = cross3(g1, g2);
        if (is_zero(n_w)) throw std::logic_error("degenerate cone");
        n_w = primitive(n_w);
        if (is_zero(cross3(n_w, n_u))) continue;  // cell parallel to U: slice empty
        IntVec g = primitive(cross3(n_u, n_w));   // direction of U cap W
        // A point of (U+v) cap W: n_w.p = 0, n_u.p = n_u.v
        RatMat a{to_rat(n_w), to_rat(n_u)};
        auto p0 = rat_solve(a, RatVec{Rat(0), Rat(dot(n_u, v))});
        if (!p0) throw std::logic_error("slice line solve failed");
        // Express p(t) = p0 + t g in cone coordinates s, u (affine in t).
        RatMat basis(3, RatVec(2));
        for (int i = 0; i < 3; ++i) {
            basis[i][0] = Rat(g1[i]);
            basis[i][1] = Rat(g2[i]);
        }
        auto c0 = rat_solve(basis, *p0);
        auto c1 = rat_solve(basis, to_rat(g));
        if (!c0 || !c1) throw std::logic_error("cone coordinate solve failed");
        // Feasible t-interval from s(t) >= 0 and u(t) >= 0.
        bool lo_inf = true, hi_inf = true, empty = false;
        Rat lo, hi;
        for (int k = 0; k < 2 && !empty; ++k) {
            Rat a0 = (*c0)[k], a1 = (*c1)[k];
            if (a1 == 0) {
                if (a0 < 0) empty = true;
                if (a0 == 0) {  // slice runs along the cone boundary
                    out.ok = false;
                    out.witness = "slice line contains a boundary ray of a cone";
                    return out;
                }
                continue;
            }
            Rat t0 = -a0 / a1;
            if (a1 > 0) {
                if (lo_inf || t0 > lo) { lo = t0; lo_inf = false; }
            } else {
                if (hi_inf || t0 < hi) { hi = t0; hi_inf = false; }
            }
        }
        if (empty) continue;
        if (!lo_inf && !hi_inf) {
            if (lo > hi) continue;
            if (lo == hi) {
                out.ok = false;
                out.witness = "slice line tangent to a cone";
                return out;
            }
            continue;  // bounded piece: no recession
        }
        Int idx_weight = [&]() -> Int {
            std::vector<IntVec> span;
            span.push_back(g1);
            span.push_back(g2);
            span.push_back(proj.basis1());
            span.push_back(proj.basis2());
            auto idx = sublattice_index(span);
            if (!idx) throw std::logic_error("transverse cells with deficient span");
            return weight * *idx;
        }();
        if (hi_inf) {
            auto c = in_plane_coords(proj, g);
            if (!c) throw std::logic_error("limit direction not in plane lattice");
            out.rays[*c] += idx_weight;
        }
        if (lo_inf) {
            auto c = in_plane_coords(proj, neg(g));
            if (!c) throw std::logic_error("limit direction not in plane lattice");
            out.rays[*c] += idx_weight;
        }
    }
    return out;
}

}  // namespace detail

/// Stable intersection of a constant-coefficient surface in R^3 with the
/// plane of `proj`, computed from the perturbation-limit definition. The
/// result is recomputed with a second independent vector and must agree.
inline WeightedFan1 stable_intersection_perturbed(const ValuedSupport& f,
                                                  const PlaneProjection& proj,
                                                  std::uint64_t seed) {
    validate_support(f);
    for (const auto& [u, v] : f.terms)
        if (v != f.terms.front().second)
            throw std::invalid_argument("perturbed fan route needs constant valuations");
    Polytope3 hull = hull3(f.exponents());
    if (hull.dim < 3)
        throw std::invalid_argument("perturbed fan route needs a full-dimensional Newton polytope");
    std::vector<std::pair<IntMat, Int>> cones;
    for (const auto& e : hull.edges) {
        IntMat gens{neg(hull.facets[e.facet1].normal), neg(hull.facets[e.facet2].normal)};
        cones.emplace_back(gens, lattice_length(hull.points[e.a], hull.points[e.b]));
    }

    PerturbRng rng(seed);
    std::string last_witness = "no draw attempted";
    std::vector<std::map<IntVec, Int>> passes;
    for (int attempt = 0; attempt < 64 && passes.size() < 2; ++attempt) {
        IntVec v = rng.vec(3, 20);
        if (is_zero(v)) continue;
        auto pass = detail::surface_plane_pass(cones, proj, v);
        if (!pass.ok) {
            last_witness = pass.witness + " (v = " + to_string(v) + ")";
            continue;
        }
        passes.push_back(std::move(pass.rays));
    }
    if (passes.size() < 2)
        throw std::runtime_error("no generic perturbation found: " + last_witness);
    if (passes[0] != passes[1])
        throw std::logic_error("perturbed stable intersection depended on the direction");
    WeightedFan1 fan;
    fan.ambient_dim = 2;
    for (const auto& [d, w] : passes[0])
        if (w != 0) fan.rays.emplace_back(d, w);
    fan.canonicalize();
    return fan;
}

// ---------------------------------------------------------------------------
// Curve x curve in the plane (complementary dimensions)

namespace detail {

struct Piece {  // affine 1-cell: base + t*dir, t in [0,1] or [0,inf)
    RatVec base;
    RatVec dir;
    bool bounded;
    Int weight;
    IntVec line_normal;  // primitive integer normal of the supporting line
    Rat line_offset;     // line_normal . x = line_offset
};

inline std::vector<Piece> curve_pieces(const PolyhedralCurve& c) {
    std::vector<Piece> out;
    auto push = [&](const RatVec& base, const RatVec& dir, bool bounded, const Int& w) {
        Piece p{base, dir, bounded, w, {}, Rat(0)};
        IntVec d = primitive_direction(dir);
        p.line_normal = IntVec{-d[1], d[0]};
        p.line_offset = rdot(p.line_normal, base);
        out.push_back(std::move(p));
    };
    for (const auto& e : c.edges)
        push(c.vertices[e.a], rsub(c.vertices[e.b], c.vertices[e.a]), true, e.weight);
    for (const auto& r : c.rays) push(c.vertices[r.base], to_rat(r.dir), false, r.weight);
    return out;
}

struct CrossRec {
    std::size_t i, j;  // piece indices in X, Y
    RatVec point;
    Int mult;
};

// All transverse crossings of X with (Y shifted by s*v); nullopt when any
// crossing is non-generic (endpoint hit or parallel overlap).
inline std::optional<std::vector<CrossRec>> crossings_at(const std::vector<Piece>& px,
                                                         const std::vector<Piece>& py,
                                                         const IntVec& v, const Rat& s) {
    std::vector<CrossRec> out;
    for (std::size_t i = 0; i < px.size(); ++i)
        for (std::size_t j = 0; j < py.size(); ++j) {
            const Piece& a = px[i];
            const Piece& b = py[j];
            Rat det = a.dir[0] * b.dir[1] - a.dir[1] * b.dir[0];
            if (det == 0) continue;  // parallel: lines distinct below all events
            RatVec rhs{b.base[0] + s * Rat(v[0]) - a.base[0],
                       b.base[1] + s * Rat(v[1]) - a.base[1]};
            Rat t = (rhs[0] * b.dir[1] - rhs[1] * b.dir[0]) / det;
            Rat r = (a.dir[1] * rhs[0] - a.dir[0] * rhs[1]) / det;
            if (t < 0 || r < 0) continue;
            if (a.bounded && t > 1) continue;
            if (b.bounded && r > 1) continue;
            bool interior = t > 0 && r > 0 && (!a.bounded || t < 1) && (!b.bounded || r < 1);
            if (!interior) return std::nullopt;
            CrossRec rec;
            rec.i = i;
            rec.j = j;
            rec.point = RatVec{a.base[0] + t * a.dir[0], a.base[1] + t * a.dir[1]};
            rec.mult = transverse_multiplicity({primitive_direction(a.dir)},
                                               {primitive_direction(b.dir)}, a.weight, b.weight);
            out.push_back(std::move(rec));
        }
    return out;
}

}  // namespace detail

/// Stable intersection of two tropical plane curves: weighted limit points
/// of X cap (Y + sv) as s -> 0, for certified-generic v. Verified against a
/// second perturbation vector internally.
inline std::vector<std::pair<RatVec, Int>> stable_intersection_perturbed(
    const PolyhedralCurve& x, const PolyhedralCurve& y, std::uint64_t seed) {
    if (x.ambient_dim != 2 || y.ambient_dim != 2)
        throw std::invalid_argument("curve stable intersection lives in R^2");
    auto px = detail::curve_pieces(x);
    auto py = detail::curve_pieces(y);

    auto one_pass = [&](const IntVec& v) -> std::optional<std::map<RatVec, Int>> {
        for (const auto& p : px)
            if (dot(p.line_normal, v) == 0) return std::nullopt;
        for (const auto& p : py)
            if (dot(p.line_normal, v) == 0) return std::nullopt;
        // Event values of s: a vertex of one complex meets a line of the other.
        std::vector<Rat> events;
        for (const auto& p : px)
            for (const auto& q : py) {
                // cell_shifts = true: the cell's line moves by +sv and the vertex
                // is static; false: the vertex moves by +sv against a static line.
                auto vertex_events = [&](const RatVec& w, const detail::Piece& cell,
                                         bool cell_shifts) {
                    Rat nv = Rat(dot(cell.line_normal, v));
                    Rat s = cell_shifts ? (rdot(cell.line_normal, w) - cell.line_offset) / nv
                                        : (cell.line_offset - rdot(cell.line_normal, w)) / nv;
                    if (s > 0) events.push_back(s);
                };
                // endpoints of q against p's line (q moves), and vice versa
                vertex_events(q.base, p, false);
                if (q.bounded) vertex_events(radd(q.base, q.dir), p, false);
                vertex_events(p.base, q, true);
                if (p.bounded) vertex_events(radd(p.base, p.dir), q, true);
            }
        Rat s0(1);
        if (!events.empty()) s0 = *std::min_element(events.begin(), events.end()) / 2;
        auto c1 = detail::crossings_at(px, py, v, s0);
        auto c2 = detail::crossings_at(px, py, v, s0 / 2);
        if (!c1 || !c2 || c1->size() != c2->size()) return std::nullopt;
        std::map<RatVec, Int> acc;
        for (std::size_t k = 0; k < c1->size(); ++k) {
            const auto& r1 = (*c1)[k];
            const auto& r2 = (*c2)[k];
            if (r1.i != r2.i || r1.j != r2.j || r1.mult != r2.mult) return std::nullopt;
            // p(s) is affine in s: extrapolate to s = 0.
            RatVec limit(2);
            for (int d = 0; d < 2; ++d) limit[d] = 2 * r2.point[d] - r1.point[d];
            acc[limit] += r1.mult;
        }
        return acc;
    };

    PerturbRng rng(seed);
    std::vector<std::map<RatVec, Int>> passes;
    for (int attempt = 0; attempt < 64 && passes.size() < 2; ++attempt) {
        IntVec v = rng.vec(2, 20);
        if (is_zero(v)) continue;
        auto pass = one_pass(v);
        if (pass) passes.push_back(std::move(*pass));
    }
    if (passes.size() < 2)
        throw std::runtime_error("no generic perturbation found for curve intersection");
    if (passes[0] != passes[1])
        throw std::logic_error("perturbed curve intersection depended on the direction");
    std::vector<std::pair<RatVec, Int>> out(passes[0].begin(), passes[0].end());
    return out;
}

/// Stable intersection with the full ambient space of weight 1: identity.
inline PolyhedralCurve stable_intersection_with_ambient(const PolyhedralCurve& x) { return x; }

}  // namespace troplift
