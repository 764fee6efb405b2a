// From a valued support (the combinatorial shadow of a Laurent polynomial:
// exponents plus coefficient valuations) compute initial supports, the
// tropical hypersurface with its dual Newton subdivision, unimodularity,
// point classification, and star fans. Min convention throughout:
// trop(f)(w) = min over terms of (u.w + val).
#pragma once

#include <functional>
#include <set>
#include <variant>

#include "troplift/fan.hpp"
#include "troplift/subdivision.hpp"

namespace troplift {

struct ValuedSupport {
    int dim = 3;
    std::vector<std::pair<IntVec, Rat>> terms;
    bool generic_coefficients = true;

    std::vector<IntVec> exponents() const {
        std::vector<IntVec> a;
        a.reserve(terms.size());
        for (const auto& [u, v] : terms) a.push_back(u);
        return a;
    }
    std::vector<Rat> valuations() const {
        std::vector<Rat> h;
        h.reserve(terms.size());
        for (const auto& [u, v] : terms) h.push_back(v);
        return h;
    }
};

inline ValuedSupport constant_support(int dim, std::vector<IntVec> exps) {
    ValuedSupport f;
    f.dim = dim;
    for (auto& u : exps) f.terms.emplace_back(std::move(u), Rat(0));
    return f;
}

inline void validate_support(const ValuedSupport& f) {
    if (f.terms.empty()) throw std::invalid_argument("support has no terms");
    for (const auto& [u, v] : f.terms)
        check_same_dim(u.size(), static_cast<std::size_t>(f.dim));
    auto exps = f.exponents();
    std::sort(exps.begin(), exps.end());
    auto dup = std::adjacent_find(exps.begin(), exps.end());
    if (dup != exps.end())
        throw std::invalid_argument("duplicate exponent " + to_string(*dup));
}

inline std::vector<int> initial_support_indices(const ValuedSupport& f, const RatVec& w) {
    check_same_dim(w.size(), static_cast<std::size_t>(f.dim));
    Rat best;
    std::vector<int> arg;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        Rat v = rdot(f.terms[i].first, w) + f.terms[i].second;
        if (arg.empty() || v < best) {
            best = v;
            arg.assign(1, static_cast<int>(i));
        } else if (v == best) {
            arg.push_back(static_cast<int>(i));
        }
    }
    return arg;
}

/// Exponents attaining min of u.w + val: the support of the initial form.
inline std::vector<IntVec> initial_support(const ValuedSupport& f, const RatVec& w) {
    std::vector<IntVec> out;
    for (int i : initial_support_indices(f, w)) out.push_back(f.terms[i].first);
    std::sort(out.begin(), out.end());
    return out;
}

/// Restriction of f to its initial support at w, with zero valuations
/// (the support data of the initial form, which has trivial valuation).
inline ValuedSupport initial_form_support(const ValuedSupport& f, const RatVec& w) {
    return constant_support(f.dim, initial_support(f, w));
}

inline bool on_hypersurface(const ValuedSupport& f, const RatVec& w) {
    return initial_support_indices(f, w).size() >= 2;
}

namespace detail {

// Minimum along p(t) = base + t*dir is attained >= twice for every t in the
// given (possibly unbounded) interval. Piecewise-linear in t, so testing
// endpoints and breakpoint-interval midpoints is exact.
inline bool min_twice_along(const ValuedSupport& f, const RatVec& base, const RatVec& dir,
                            std::optional<Rat> t_lo, std::optional<Rat> t_hi) {
    std::vector<std::pair<Rat, Rat>> lin;  // value = first + t*second
    for (const auto& [u, v] : f.terms)
        lin.emplace_back(rdot(u, base) + v, rdot(u, dir));
    std::vector<Rat> breaks;
    for (std::size_t i = 0; i < lin.size(); ++i)
        for (std::size_t j = i + 1; j < lin.size(); ++j) {
            if (lin[i].second == lin[j].second) continue;
            Rat t = (lin[j].first - lin[i].first) / (lin[i].second - lin[j].second);
            if (t_lo && t <= *t_lo) continue;
            if (t_hi && t >= *t_hi) continue;
            breaks.push_back(t);
        }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<Rat> samples;
    if (t_lo) samples.push_back(*t_lo);
    if (t_hi) samples.push_back(*t_hi);
    Rat low = breaks.empty() ? (t_lo ? *t_lo : Rat(0)) : breaks.front() - 1;
    Rat high = breaks.empty() ? (t_hi ? *t_hi : Rat(0)) : breaks.back() + 1;
    if (!t_lo) samples.push_back(low - 1);
    if (!t_hi) samples.push_back(high + 1);
    std::vector<Rat> grid = breaks;
    if (t_lo) grid.insert(grid.begin(), *t_lo);
    else grid.insert(grid.begin(), low - 1);
    if (t_hi) grid.push_back(*t_hi);
    else grid.push_back(high + 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        samples.push_back((grid[i] + grid[i + 1]) / 2);

    for (const Rat& t : samples) {
        Rat best;
        int count = 0;
        for (const auto& [a, b] : lin) {
            Rat v = a + t * b;
            if (count == 0 || v < best) {
                best = v;
                count = 1;
            } else if (v == best) {
                ++count;
            }
        }
        if (count < 2) return false;
    }
    return true;
}

}  // namespace detail

inline bool segment_on_hypersurface(const ValuedSupport& f, const RatVec& p, const RatVec& q) {
    if (p == q) return on_hypersurface(f, p);
    return detail::min_twice_along(f, p, rsub(q, p), Rat(0), Rat(1));
}

inline bool ray_on_hypersurface(const ValuedSupport& f, const RatVec& base, const IntVec& dir) {
    return detail::min_twice_along(f, base, to_rat(dir), Rat(0), std::nullopt);
}

inline bool line_on_hypersurface(const ValuedSupport& f, const RatVec& base, const IntVec& dir) {
    return detail::min_twice_along(f, base, to_rat(dir), std::nullopt, std::nullopt);
}

/// Newton subdivision of the support induced by the valuations.
inline Subdivision newton_subdivision(const ValuedSupport& f) {
    validate_support(f);
    return upper_hull_subdivision(f.exponents(), f.valuations());
}

/// Unimodular polynomial: the Newton subdivision consists of unimodular
/// simplices only.
inline bool is_unimodular_poly(const ValuedSupport& f) {
    return is_unimodular_subdivision(newton_subdivision(f));
}

enum class PointClass { Outside, FacetInterior, EdgeInterior, Vertex };

inline const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Outside: return "outside";
        case PointClass::FacetInterior: return "facet_interior";
        case PointClass::EdgeInterior: return "edge_interior";
        case PointClass::Vertex: return "vertex";
    }
    return "?";
}

/// Classifies w against a unimodular surface in R^3 by the cardinality of
/// the initial support (1 outside, 2 facet, 3 edge, 4 vertex).
inline PointClass locate_point(const ValuedSupport& f, const RatVec& w) {
    if (f.dim != 3) throw std::invalid_argument("locate_point needs a support in Z^3");
    Subdivision s = newton_subdivision(f);
    if (s.cell_dim != 3 || !is_unimodular_subdivision(s))
        throw std::invalid_argument("classification by cardinality requires unimodularity");
    switch (initial_support_indices(f, w).size()) {
        case 1: return PointClass::Outside;
        case 2: return PointClass::FacetInterior;
        case 3: return PointClass::EdgeInterior;
        case 4: return PointClass::Vertex;
        default: throw std::logic_error("initial support too large for unimodular surface");
    }
}

// ---------------------------------------------------------------------------
// Tropical plane curves (dim 2)

struct TropCurve2 {
    PolyhedralCurve complex;  // ambient dimension 2
    Subdivision dual;
};

inline TropCurve2 trop_curve2(const ValuedSupport& f) {
    if (f.dim != 2) throw std::invalid_argument("trop_curve2 needs a support in Z^2");
    validate_support(f);
    TropCurve2 out;
    out.complex.ambient_dim = 2;
    out.dual = upper_hull_subdivision(f.exponents(), f.valuations());
    const Subdivision& s = out.dual;
    if (s.cell_dim == 0) return out;  // monomial: empty hypersurface

    if (s.cell_dim == 1) {
        // Collinear support: one full line per cell of the 1-dim subdivision.
        for (const auto& cell : s.cells) {
            const IntVec& u0 = s.points[cell.support.front()];
            const IntVec& u1 = s.points[cell.support.back()];
            IntVec d = sub(u1, u0);
            Rat c = s.heights[cell.support.front()] - s.heights[cell.support.back()];
            Rat dd = Rat(dot(d, d));
            RatVec w0{Rat(d[0]) * c / dd, Rat(d[1]) * c / dd};  // d.w0 = c
            IntVec dir = primitive(IntVec{-d[1], d[0]});
            int vi = static_cast<int>(out.complex.vertices.size());
            out.complex.vertices.push_back(w0);
            Int w = lattice_length(u0, u1);
            out.complex.rays.push_back({vi, dir, w});
            out.complex.rays.push_back({vi, neg(dir), w});
        }
        return out;
    }

    // Full-dimensional: one trop vertex per cell at minus the cell gradient.
    for (const auto& cell : s.cells) {
        RatVec w(2);
        w[0] = -cell.gradient[0];
        w[1] = -cell.gradient[1];
        out.complex.vertices.push_back(w);
    }
    // Faces of cells, keyed by their full support point sets.
    struct FaceRec {
        std::vector<int> cells;
        IntVec from, to;
        IntVec inner_normal;
    };
    std::map<std::vector<int>, FaceRec> faces;
    for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
        std::vector<IntVec> pts;
        for (int i : s.cells[ci].support) pts.push_back(s.points[i]);
        LatticePolygon poly = hull2(pts);
        for (const auto& e : polygon_edges(poly)) {
            std::vector<int> key;
            for (int i : s.cells[ci].support) {
                const IntVec& p = s.points[i];
                // p on segment [from, to]?
                IntVec d1 = sub(e.to, e.from), d2 = sub(p, e.from);
                if (d1[0] * d2[1] - d1[1] * d2[0] != 0) continue;
                Int t_num = dot(d2, d1), t_den = dot(d1, d1);
                if (t_num < 0 || t_num > t_den) continue;
                key.push_back(i);
            }
            std::sort(key.begin(), key.end());
            auto& rec = faces[key];
            rec.cells.push_back(static_cast<int>(ci));
            rec.from = e.from;
            rec.to = e.to;
            rec.inner_normal = e.inner_normal;
        }
    }
    for (const auto& [key, rec] : faces) {
        Int w = lattice_length(rec.from, rec.to);
        if (rec.cells.size() == 2) {
            out.complex.edges.push_back({rec.cells[0], rec.cells[1], w});
        } else if (rec.cells.size() == 1) {
            out.complex.rays.push_back({rec.cells[0], rec.inner_normal, w});
        } else {
            throw std::logic_error("subdivision face shared by > 2 cells");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tropical surfaces in R^3: explicit 1-skeleton plus 2-cell weights; the
// 2-cell polygons stay implicit in the dual subdivision.

struct TropSurface3 {
    std::vector<RatVec> vertices;  // aligned with dual.cells
    struct SEdge {
        int a, b;
    };
    struct SRay {
        int base;
        IntVec dir;
    };
    struct Cell2 {
        std::vector<int> face_support;  // dual subdivision edge (point indices)
        Int weight;                     // lattice length of that edge
    };
    std::vector<SEdge> edges;
    std::vector<SRay> rays;
    std::vector<Cell2> cells2;
    Subdivision dual;
};

inline TropSurface3 trop_surface3(const ValuedSupport& f) {
    if (f.dim != 3) throw std::invalid_argument("trop_surface3 needs a support in Z^3");
    validate_support(f);
    TropSurface3 out;
    out.dual = upper_hull_subdivision(f.exponents(), f.valuations());
    const Subdivision& s = out.dual;
    if (s.cell_dim < 3)
        throw std::invalid_argument(
            "surface 1-skeleton needs a full-dimensional Newton polytope (got dimension " +
            std::to_string(s.cell_dim) + ")");

    for (const auto& cell : s.cells) {
        RatVec w(3);
        for (int k = 0; k < 3; ++k) w[k] = -cell.gradient[k];
        out.vertices.push_back(w);
    }

    // 2-faces of cells -> trop edges/rays; 1-faces -> weighted 2-cells.
    std::map<std::vector<int>, std::pair<std::vector<int>, IntVec>> face2;  // key -> (cells, ray dir)
    std::map<std::vector<int>, Int> face1;                                  // key -> weight
    for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
        std::vector<IntVec> pts;
        for (int i : s.cells[ci].support) pts.push_back(s.points[i]);
        Polytope3 hull = hull3(pts);
        auto global = [&](const IntVec& p) {
            for (int i : s.cells[ci].support)
                if (s.points[i] == p) return i;
            throw std::logic_error("cell point lookup failed");
        };
        for (const auto& fc : hull.facets) {
            std::vector<int> key;
            for (int li : fc.support) key.push_back(global(hull.points[li]));
            std::sort(key.begin(), key.end());
            auto& rec = face2[key];
            rec.first.push_back(static_cast<int>(ci));
            rec.second = neg(fc.normal);  // min-convention inner normal
        }
        for (const auto& ed : hull.edges) {
            const IntVec& a = hull.points[ed.a];
            const IntVec& b = hull.points[ed.b];
            std::vector<int> key;
            for (int i : s.cells[ci].support) {
                const IntVec& p = s.points[i];
                IntVec d1 = sub(b, a), d2 = sub(p, a);
                if (!is_zero(cross3(d1, d2))) continue;
                Int t_num = dot(d2, d1), t_den = dot(d1, d1);
                if (t_num < 0 || t_num > t_den) continue;
                key.push_back(i);
            }
            std::sort(key.begin(), key.end());
            face1[key] = lattice_length(a, b);
        }
    }
    for (const auto& [key, rec] : face2) {
        if (rec.first.size() == 2)
            out.edges.push_back({rec.first[0], rec.first[1]});
        else if (rec.first.size() == 1)
            out.rays.push_back({rec.first[0], rec.second});
        else
            throw std::logic_error("subdivision 2-face shared by > 2 cells");
    }
    for (const auto& [key, w] : face1) out.cells2.push_back({key, w});
    return out;
}

// ---------------------------------------------------------------------------
// Star fans

/// Star of a plane-curve hypersurface at w, as a fan of directions.
/// Computed from the initial support; equal to star_at of the complex.
inline WeightedFan1 star_curve_fan(const ValuedSupport& f, const RatVec& w) {
    if (f.dim != 2) throw std::invalid_argument("star_curve_fan needs dim 2");
    auto a = initial_support(f, w);
    if (a.size() < 2) return make_fan(2, {});
    return polygon_normal_fan(hull2(a));
}

/// Star of a surface in R^3 at w as a 2-dimensional fan: the positive
/// codimension skeleton of the normal fan of the initial support's hull.
/// Handles hulls of dimension 3 (generic), 2 (cylinder over a polygon
/// fan), 1 (a full plane), and 0 (w off the surface: empty fan).
inline PlaneFan star_plane_fan(const ValuedSupport& f, const RatVec& w) {
    if (f.dim != 3) throw std::invalid_argument("star_plane_fan needs dim 3");
    PlaneFan fan;
    auto a = initial_support(f, w);
    if (a.size() < 2) return fan;
    Polytope3 hull = hull3(a);

    auto ray_index = [&](const IntVec& d) {
        for (std::size_t i = 0; i < fan.rays.size(); ++i)
            if (fan.rays[i] == d) return static_cast<int>(i);
        fan.rays.push_back(d);
        return static_cast<int>(fan.rays.size() - 1);
    };

    if (hull.dim == 3) {
        for (const auto& ed : hull.edges) {
            IntVec n1 = neg(hull.facets[ed.facet1].normal);
            IntVec n2 = neg(hull.facets[ed.facet2].normal);
            Int wgt = lattice_length(hull.points[ed.a], hull.points[ed.b]);
            fan.cones.push_back({ray_index(n1), ray_index(n2), wgt});
        }
        return fan;
    }
    if (hull.dim == 2) {
        // Cylinder: in-plane edge normals extended along +-plane_normal.
        const IntVec& axis = hull.plane_normal;
        const auto& cyc = hull.cycle2;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const IntVec& p = hull.points[cyc[i]];
            const IntVec& q = hull.points[cyc[(i + 1) % cyc.size()]];
            IntVec v = cross3(axis, sub(q, p));
            // orient into the polygon
            const IntVec& other = hull.points[cyc[(i + 2) % cyc.size()]];
            if (dot(v, sub(other, p)) < 0) v = neg(v);
            v = primitive(v);
            Int wgt = lattice_length(p, q);
            int vi = ray_index(v);
            fan.cones.push_back({vi, ray_index(axis), wgt});
            fan.cones.push_back({vi, ray_index(neg(axis)), wgt});
        }
        return fan;
    }
    // hull.dim == 1: the star is the full plane orthogonal to the segment.
    const IntVec& p = hull.points[hull.vertices.front()];
    const IntVec& q = hull.points[hull.vertices.back()];
    IntMat basis = hnf_rows(integer_kernel_basis(IntMat{sub(q, p)}, 3));
    Int wgt = lattice_length(p, q);
    int b1 = ray_index(basis[0]), b2 = ray_index(basis[1]);
    int m1 = ray_index(neg(basis[0])), m2 = ray_index(neg(basis[1]));
    fan.cones.push_back({b1, b2, wgt});
    fan.cones.push_back({b2, m1, wgt});
    fan.cones.push_back({m1, m2, wgt});
    fan.cones.push_back({m2, b1, wgt});
    return fan;
}

/// Balancing of a plane tropical curve at every vertex of its complex.
inline bool curve_complex_balanced(const TropCurve2& t) {
    for (const auto& v : t.complex.vertices)
        if (!is_balanced(star_at(t.complex, v))) return false;
    return true;
}

/// Balancing of a tropical surface around every edge of its 1-skeleton:
/// for the 2-face dual to the edge, the weighted primitive images of the
/// adjacent 2-cell directions must close up in the quotient by the edge
/// line.
inline bool surface_balanced(const TropSurface3& t) {
    const Subdivision& s = t.dual;
    // Reconstruct the 2-faces exactly as the skeleton construction keyed them.
    std::set<std::vector<int>> face_keys;
    for (const auto& cell : s.cells) {
        std::vector<IntVec> pts;
        for (int i : cell.support) pts.push_back(s.points[i]);
        Polytope3 hull = hull3(pts);
        for (const auto& fc : hull.facets) {
            std::vector<int> key;
            for (int li : fc.support)
                for (int i : cell.support)
                    if (s.points[i] == hull.points[li]) key.push_back(i);
            std::sort(key.begin(), key.end());
            face_keys.insert(key);
        }
    }
    for (const auto& key : face_keys) {
        std::vector<IntVec> pts;
        for (int i : key) pts.push_back(s.points[i]);
        IntVec n_f;
        {
            bool got = false;
            for (std::size_t i = 1; i < pts.size() && !got; ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    IntVec c = cross3(sub(pts[i], pts[0]), sub(pts[j], pts[0]));
                    if (!is_zero(c)) {
                        n_f = primitive(c);
                        got = true;
                        break;
                    }
                }
            if (!got) return false;  // degenerate 2-face
        }
        std::vector<int> local(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) local[i] = static_cast<int>(i);
        std::vector<int> cycle = detail::planar_cycle(pts, local, n_f);
        IntMat q = quotient_by_line(n_f);
        IntVec total{0, 0};
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const IntVec& a = pts[cycle[i]];
            const IntVec& b = pts[cycle[(i + 1) % cycle.size()]];
            IntVec v = cross3(n_f, sub(b, a));  // in-plane edge normal
            const IntVec& other = pts[cycle[(i + 2) % cycle.size()]];
            if (dot(v, sub(other, a)) < 0) v = neg(v);
            IntVec img{dot(q[0], v), dot(q[1], v)};
            total = add(total, scale(lattice_length(a, b), primitive(img)));
        }
        if (!is_zero(total)) return false;
    }
    return true;
}

using TropHypersurface = std::variant<TropCurve2, TropSurface3>;

/// Dispatches on the ambient dimension. A monomial gives the empty complex
/// (dim 2); degenerate dim-3 supports are rejected by trop_surface3.
inline TropHypersurface trop_hypersurface(const ValuedSupport& f) {
    if (f.dim == 2) return trop_curve2(f);
    return trop_surface3(f);
}

}  // namespace troplift
