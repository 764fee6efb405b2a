// Lattice polygons: exact 2-D convex hulls, Minkowski sums, mixed areas.
// Degenerate hulls (point, segment) are first-class values with a
// dimension tag since the case analysis downstream needs them.
#pragma once

#include <algorithm>

#include "troplift/lattice.hpp"

namespace troplift {

struct LatticePolygon {
    // Strictly convex counterclockwise cycle; 1 vertex = point,
    // 2 vertices = segment, >= 3 vertices = polygon.
    std::vector<IntVec> verts;

    int dim() const {
        if (verts.size() <= 1) return 0;
        return verts.size() == 2 ? 1 : 2;
    }
    bool operator==(const LatticePolygon& o) const { return verts == o.verts; }
};

inline Int cross2(const IntVec& o, const IntVec& a, const IntVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Convex hull as a minimal ccw vertex cycle, starting from the
/// lexicographically smallest vertex. Idempotent.
inline LatticePolygon hull2(std::vector<IntVec> pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : pts) check_same_dim(p.size(), 2);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon poly;
    if (pts.size() == 1) {
        poly.verts = pts;
        return poly;
    }
    std::vector<IntVec> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower chain
        while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 1) {  // collinear input: keep the two extremes
        poly.verts = {pts.front(), pts.back()};
        return poly;
    }
    // Rotate so the lex-smallest vertex comes first.
    auto mn = std::min_element(h.begin(), h.end());
    std::rotate(h.begin(), mn, h.end());
    poly.verts = h;
    return poly;
}

inline Int twice_area(const LatticePolygon& p) {
    if (p.dim() < 2) return 0;
    Int s = 0;
    for (std::size_t i = 0; i < p.verts.size(); ++i) {
        const auto& a = p.verts[i];
        const auto& b = p.verts[(i + 1) % p.verts.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return s;  // positive for ccw
}

inline Rat area(const LatticePolygon& p) { return Rat(twice_area(p), 2); }

struct PolygonEdge {
    IntVec from, to;
    IntVec direction;     // primitive
    Int length;           // lattice length
    IntVec inner_normal;  // primitive, points into the polygon
};

/// Edges of a polygon in ccw order; a segment yields its two orientations.
inline std::vector<PolygonEdge> polygon_edges(const LatticePolygon& p) {
    std::vector<PolygonEdge> out;
    if (p.dim() == 0) return out;
    std::size_t n = p.verts.size();
    std::size_t count = (p.dim() == 1) ? 2 : n;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& a = p.verts[i % n];
        const auto& b = p.verts[(i + 1) % n];
        PolygonEdge e;
        e.from = a;
        e.to = b;
        IntVec d = sub(b, a);
        e.length = content(d);
        e.direction = primitive(d);
        e.inner_normal = IntVec{-e.direction[1], e.direction[0]};
        out.push_back(e);
    }
    return out;
}

inline LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
    std::vector<IntVec> sums;
    for (const auto& a : p.verts)
        for (const auto& b : q.verts) sums.push_back(add(a, b));
    return hull2(sums);
}

/// Normalized mixed volume in the plane: area(P+Q) - area(P) - area(Q).
/// Two transversal unit segments give 1.
inline Rat mixed_area(const LatticePolygon& p, const LatticePolygon& q) {
    return area(minkowski_sum(p, q)) - area(p) - area(q);
}

/// Translate so the lexicographically smallest vertex sits at the origin.
inline LatticePolygon normalize_translation(const LatticePolygon& p) {
    IntVec base = *std::min_element(p.verts.begin(), p.verts.end());
    LatticePolygon out;
    for (const auto& v : p.verts) out.verts.push_back(sub(v, base));
    auto mn = std::min_element(out.verts.begin(), out.verts.end());
    std::rotate(out.verts.begin(), mn, out.verts.end());
    return out;
}

}  // namespace troplift
