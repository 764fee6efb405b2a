// Weighted balanced fans and polyhedral curves: balancing, stars, tropical
// cycle sums and summands, classical line detection, integral multiples.
#pragma once

#include <map>
#include <optional>

#include "troplift/polygon.hpp"

namespace troplift {

// One-dimensional weighted fan: rays with primitive directions and positive
// weights, kept in canonical (lexicographic) order so equality is syntactic.
struct WeightedFan1 {
    int ambient_dim = 2;
    std::vector<std::pair<IntVec, Int>> rays;

    void canonicalize() {
        std::map<IntVec, Int> merged;
        for (auto& [d, w] : rays) merged[d] += w;
        rays.clear();
        for (auto& [d, w] : merged)
            if (w != 0) rays.emplace_back(d, w);
    }
    bool empty() const { return rays.empty(); }
    bool operator==(const WeightedFan1& o) const {
        return ambient_dim == o.ambient_dim && rays == o.rays;
    }
};

inline WeightedFan1 make_fan(int dim, std::vector<std::pair<IntVec, Int>> rays) {
    WeightedFan1 f;
    f.ambient_dim = dim;
    f.rays = std::move(rays);
    f.canonicalize();
    return f;
}

/// Balancing at the apex: the weighted sum of primitive directions is zero.
inline bool is_balanced(const WeightedFan1& f) {
    IntVec s(f.ambient_dim, Int(0));
    for (const auto& [d, w] : f.rays) s = add(s, scale(w, d));
    return is_zero(s);
}

inline WeightedFan1 cycle_sum(const WeightedFan1& a, const WeightedFan1& b) {
    if (!a.rays.empty() && !b.rays.empty())
        check_same_dim(a.ambient_dim, b.ambient_dim);
    WeightedFan1 out;
    out.ambient_dim = a.rays.empty() ? b.ambient_dim : a.ambient_dim;
    out.rays = a.rays;
    out.rays.insert(out.rays.end(), b.rays.begin(), b.rays.end());
    out.canonicalize();
    return out;
}

/// True iff every ray of `sub` occurs in `sup` with at least its weight and
/// the weight-difference fan is again balanced.
inline bool is_cycle_summand(const WeightedFan1& sub, const WeightedFan1& sup) {
    if (!is_balanced(sub) || !is_balanced(sup))
        throw std::invalid_argument("cycle summand check requires balanced fans");
    std::map<IntVec, Int> rest;
    for (const auto& [d, w] : sup.rays) rest[d] = w;
    for (const auto& [d, w] : sub.rays) {
        auto it = rest.find(d);
        if (it == rest.end() || it->second < w) return false;
        it->second -= w;
    }
    WeightedFan1 diff;
    diff.ambient_dim = sup.ambient_dim;
    for (auto& [d, w] : rest)
        if (w != 0) diff.rays.emplace_back(d, w);
    return is_balanced(diff);
}

/// Directions u (sign-canonical) such that both u and -u are rays: each such
/// pair carries a weight-1 classical line as a summand.
inline std::vector<IntVec> classical_lines_in(const WeightedFan1& f) {
    if (!is_balanced(f)) throw std::invalid_argument("fan not balanced");
    std::vector<IntVec> out;
    for (const auto& [d, w] : f.rays) {
        IntVec opp = neg(d);
        for (const auto& [d2, w2] : f.rays)
            if (d2 == opp && canonical_sign(d) == d) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// k such that a = k*b (same rays, all weights scaled by one integer).
inline std::optional<Int> multiple_of(const WeightedFan1& a, const WeightedFan1& b) {
    if (!is_balanced(a) || !is_balanced(b))
        throw std::invalid_argument("multiple check requires balanced fans");
    if (a.rays.size() != b.rays.size() || a.rays.empty()) return std::nullopt;
    std::optional<Int> k;
    for (std::size_t i = 0; i < a.rays.size(); ++i) {
        if (a.rays[i].first != b.rays[i].first) return std::nullopt;
        const Int& wa = a.rays[i].second;
        const Int& wb = b.rays[i].second;
        if (wa % wb != 0) return std::nullopt;
        Int q = wa / wb;
        if (k && *k != q) return std::nullopt;
        k = q;
    }
    return k;
}

/// The weighted fan dual to a polygon (inner normal rays weighted by edge
/// lattice lengths); a segment yields the orthogonal line, a point nothing.
inline WeightedFan1 polygon_normal_fan(const LatticePolygon& p) {
    WeightedFan1 f;
    f.ambient_dim = 2;
    for (const auto& e : polygon_edges(p))
        f.rays.emplace_back(e.inner_normal, e.length);
    f.canonicalize();
    return f;
}

/// True iff some M in GL2(Z) maps the rays of `a` onto the rays of `b`
/// weight for weight.
inline bool fans_unimodular_equivalent(const WeightedFan1& a, const WeightedFan1& b) {
    if (a.rays.size() != b.rays.size()) return false;
    if (a.rays.empty()) return true;
    auto image_matches = [&](const IntMat& m) {
        std::vector<std::pair<IntVec, Int>> img;
        for (const auto& [d, w] : a.rays)
            img.emplace_back(IntVec{m[0][0] * d[0] + m[0][1] * d[1],
                                    m[1][0] * d[0] + m[1][1] * d[1]},
                             w);
        std::sort(img.begin(), img.end());
        return img == b.rays;
    };
    for (std::size_t i = 0; i < a.rays.size(); ++i)
        for (std::size_t j = 0; j < a.rays.size(); ++j) {
            if (i == j) continue;
            const IntVec& a1 = a.rays[i].first;
            const IntVec& a2 = a.rays[j].first;
            if (a1[0] * a2[1] - a1[1] * a2[0] == 0) continue;
            for (std::size_t k = 0; k < b.rays.size(); ++k)
                for (std::size_t l = 0; l < b.rays.size(); ++l) {
                    if (k == l) continue;
                    if (a.rays[i].second != b.rays[k].second ||
                        a.rays[j].second != b.rays[l].second)
                        continue;
                    auto m = detail::solve_gl2(a1, a2, b.rays[k].first, b.rays[l].first);
                    if (m && image_matches(*m)) return true;
                }
        }
    return false;
}

// A tropical curve: vertices in Q^n with weighted bounded edges and rays.
// Global balancing is not enforced at construction; `validate_curve`
// reports the first unbalanced vertex instead so the CLI can diagnose
// user-supplied data.
struct PolyhedralCurve {
    int ambient_dim = 3;
    std::vector<RatVec> vertices;
    struct Edge {
        int a, b;
        Int weight;
    };
    struct Ray {
        int base;
        IntVec dir;  // primitive
        Int weight;
    };
    std::vector<Edge> edges;
    std::vector<Ray> rays;
};

namespace detail {

// Is q on the closed segment [a, b]?  (exact, any dimension)
inline bool on_segment(const RatVec& a, const RatVec& b, const RatVec& q) {
    RatVec ab = rsub(b, a), aq = rsub(q, a);
    // collinearity: aq = t*ab for some t in [0,1]
    std::size_t piv = ab.size();
    for (std::size_t i = 0; i < ab.size(); ++i)
        if (ab[i] != 0) { piv = i; break; }
    if (piv == ab.size()) return is_zero(aq);
    Rat t = aq[piv] / ab[piv];
    if (t < 0 || t > 1) return false;
    for (std::size_t i = 0; i < ab.size(); ++i)
        if (aq[i] != t * ab[i]) return false;
    return true;
}

// Is q on the closed ray {base + t*dir, t >= 0}?  Returns t if so.
inline std::optional<Rat> on_ray(const RatVec& base, const IntVec& dir, const RatVec& q) {
    RatVec bq = rsub(q, base);
    std::size_t piv = dir.size();
    for (std::size_t i = 0; i < dir.size(); ++i)
        if (dir[i] != 0) { piv = i; break; }
    if (piv == dir.size()) return std::nullopt;
    Rat t = bq[piv] / Rat(dir[piv]);
    if (t < 0) return std::nullopt;
    for (std::size_t i = 0; i < dir.size(); ++i)
        if (bq[i] != t * Rat(dir[i])) return std::nullopt;
    return t;
}

}  // namespace detail

/// Star of the curve at w: primitive directions of the pieces emanating
/// from w with inherited weights; a point interior to an edge yields the
/// two opposite directions. Empty fan when w is off the curve.
inline WeightedFan1 star_at(const PolyhedralCurve& c, const RatVec& w) {
    WeightedFan1 f;
    f.ambient_dim = c.ambient_dim;
    for (const auto& e : c.edges) {
        const RatVec& a = c.vertices[e.a];
        const RatVec& b = c.vertices[e.b];
        if (w == a)
            f.rays.emplace_back(primitive_direction(rsub(b, a)), e.weight);
        else if (w == b)
            f.rays.emplace_back(primitive_direction(rsub(a, b)), e.weight);
        else if (detail::on_segment(a, b, w)) {
            f.rays.emplace_back(primitive_direction(rsub(b, a)), e.weight);
            f.rays.emplace_back(primitive_direction(rsub(a, b)), e.weight);
        }
    }
    for (const auto& r : c.rays) {
        const RatVec& base = c.vertices[r.base];
        if (w == base) {
            f.rays.emplace_back(r.dir, r.weight);
            continue;
        }
        auto t = detail::on_ray(base, r.dir, w);
        if (t && *t > 0) {
            f.rays.emplace_back(r.dir, r.weight);
            f.rays.emplace_back(neg(r.dir), r.weight);
        }
    }
    f.canonicalize();
    return f;
}

/// First unbalanced vertex, if any.
inline std::optional<std::string> validate_curve(const PolyhedralCurve& c) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        WeightedFan1 star = star_at(c, c.vertices[i]);
        if (!is_balanced(star))
            return "unbalanced at vertex " + to_string(c.vertices[i]);
    }
    return std::nullopt;
}

/// Realizes a fan as a curve: one vertex at `base`, one ray per direction.
inline PolyhedralCurve curve_of_fan(const WeightedFan1& f, const RatVec& base) {
    PolyhedralCurve c;
    c.ambient_dim = f.ambient_dim;
    c.vertices.push_back(base);
    for (const auto& [d, w] : f.rays) c.rays.push_back({0, d, w});
    return c;
}

// A 2-dimensional fan in R^3: rays plus weighted 2-cones spanned by ray
// pairs. Cone membership is by exact nonnegative rational combination.
struct PlaneFan {
    std::vector<IntVec> rays;  // primitive
    struct Cone {
        int a, b;
        Int weight;
    };
    std::vector<Cone> cones;
};

namespace detail {

inline bool in_cone(const IntVec& g1, const IntVec& g2, const IntVec& u) {
    RatMat a(3, RatVec(2));
    for (int i = 0; i < 3; ++i) {
        a[i][0] = Rat(g1[i]);
        a[i][1] = Rat(g2[i]);
    }
    auto x = rat_solve(a, to_rat(u));
    if (!x) return false;
    for (int i = 0; i < 3; ++i)
        if ((*x)[0] * Rat(g1[i]) + (*x)[1] * Rat(g2[i]) != Rat(u[i])) return false;
    return (*x)[0] >= 0 && (*x)[1] >= 0;
}

}  // namespace detail

/// True iff both u and -u lie in the union of the fan's closed cones.
inline bool contains_line_direction(const PlaneFan& p, const IntVec& u) {
    if (is_zero(u)) throw std::invalid_argument("zero direction");
    auto member = [&](const IntVec& v) {
        for (const auto& c : p.cones)
            if (detail::in_cone(p.rays[c.a], p.rays[c.b], v)) return true;
        return false;
    };
    return member(u) && member(neg(u));
}

}  // namespace troplift
