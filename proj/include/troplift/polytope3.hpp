// Lattice 3-polytopes at desk scale: hulls by supporting-plane
// enumeration (exact, O(n^4), fine for the <= ~30 point supports this
// library sees), facet cycles, edges, volumes.
#pragma once

#include <map>

#include "troplift/polygon.hpp"

namespace troplift {

struct Facet3 {
    IntVec normal;  // primitive outward
    Int offset;     // normal . x = offset on the facet plane
    std::vector<int> cycle;    // vertex indices, ccw seen from outside
    std::vector<int> support;  // all input points on the facet
};

struct Polytope3 {
    std::vector<IntVec> points;  // the input set
    int dim = -1;                // 0, 1, 2, or 3
    std::vector<int> vertices;   // extreme point indices
    std::vector<Facet3> facets;  // dim 3 only
    // dim 2 only: the supporting plane and the polygon cycle in it
    IntVec plane_normal;
    std::vector<int> cycle2;

    struct Edge {
        int a, b;       // vertex indices (endpoints)
        int facet1, facet2;
    };
    std::vector<Edge> edges;  // dim 3 only
};

namespace detail {

// Orders coplanar points (indices) into a convex ccw cycle as seen against
// the plane normal; inner points (not extreme in the plane) are dropped.
inline std::vector<int> planar_cycle(const std::vector<IntVec>& pts,
                                     const std::vector<int>& idx,
                                     const IntVec& normal) {
    // Project out the largest-normal axis to get exact 2-D coordinates.
    int drop = 0;
    for (int i = 1; i < 3; ++i)
        if (iabs(normal[i]) > iabs(normal[drop])) drop = i;
    int u = (drop + 1) % 3, v = (drop + 2) % 3;
    std::vector<IntVec> flat;
    std::map<IntVec, std::vector<int>> back;
    for (int i : idx) {
        IntVec q{pts[i][u], pts[i][v]};
        back[q].push_back(i);
        flat.push_back(q);
    }
    LatticePolygon h = hull2(flat);
    std::vector<int> cycle;
    for (const auto& q : h.verts) cycle.push_back(back.at(q).front());
    // Fix orientation: ccw w.r.t. the outward normal.
    if (cycle.size() >= 3) {
        IntVec e1 = sub(pts[cycle[1]], pts[cycle[0]]);
        IntVec e2 = sub(pts[cycle[2]], pts[cycle[1]]);
        if (dot(cross3(e1, e2), normal) < 0)
            std::reverse(cycle.begin(), cycle.end());
    }
    return cycle;
}

}  // namespace detail

inline Polytope3 hull3(const std::vector<IntVec>& input) {
    if (input.empty()) throw std::invalid_argument("empty point set");
    if (input.size() > 120) throw std::invalid_argument("point set too large");
    for (const auto& p : input) check_same_dim(p.size(), 3);
    std::vector<IntVec> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope3 poly;
    poly.points = pts;
    const int n = static_cast<int>(pts.size());
    poly.dim = affine_rank(pts);

    if (poly.dim == 0) {
        poly.vertices = {0};
        return poly;
    }
    if (poly.dim == 1) {
        poly.vertices = {0, n - 1};  // sorted, collinear: extremes are ends
        return poly;
    }
    if (poly.dim == 2) {
        IntVec d1, d2;
        bool got = false;
        for (int i = 1; i < n && !got; ++i) {
            d1 = sub(pts[i], pts[0]);
            for (int j = i + 1; j < n; ++j) {
                d2 = sub(pts[j], pts[0]);
                if (!is_zero(cross3(d1, d2))) { got = true; break; }
            }
        }
        poly.plane_normal = canonical_sign(primitive(cross3(d1, d2)));
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        poly.cycle2 = detail::planar_cycle(pts, all, poly.plane_normal);
        poly.vertices = poly.cycle2;
        std::sort(poly.vertices.begin(), poly.vertices.end());
        return poly;
    }

    // Full-dimensional: every supporting plane is spanned by some triple.
    std::map<std::pair<IntVec, Int>, std::vector<int>> planes;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                IntVec nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (is_zero(nrm)) continue;
                nrm = primitive(nrm);
                bool above = false, below = false;
                for (int m = 0; m < n && !(above && below); ++m) {
                    Int s = dot(nrm, sub(pts[m], pts[i]));
                    if (s > 0) above = true;
                    if (s < 0) below = true;
                }
                if (above && below) continue;
                if (above) nrm = neg(nrm);  // make it outward
                Int off = dot(nrm, pts[i]);
                auto key = std::make_pair(nrm, off);
                if (planes.count(key)) continue;
                std::vector<int> supp;
                for (int m = 0; m < n; ++m)
                    if (dot(nrm, pts[m]) == off) supp.push_back(m);
                planes.emplace(key, std::move(supp));
            }

    std::vector<char> is_vertex(n, 0);
    for (const auto& [key, supp] : planes) {
        Facet3 f;
        f.normal = key.first;
        f.offset = key.second;
        f.support = supp;
        f.cycle = detail::planar_cycle(pts, supp, f.normal);
        for (int i : f.cycle) is_vertex[i] = 1;
        poly.facets.push_back(std::move(f));
    }
    for (int i = 0; i < n; ++i)
        if (is_vertex[i]) poly.vertices.push_back(i);

    // Edges: consecutive cycle pairs, each shared by exactly two facets.
    std::map<std::pair<int, int>, std::vector<int>> edge_facets;
    for (std::size_t fi = 0; fi < poly.facets.size(); ++fi) {
        const auto& c = poly.facets[fi].cycle;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (a > b) std::swap(a, b);
            edge_facets[{a, b}].push_back(static_cast<int>(fi));
        }
    }
    for (const auto& [e, fs] : edge_facets) {
        if (fs.size() != 2) throw std::logic_error("hull edge not on two facets");
        poly.edges.push_back({e.first, e.second, fs[0], fs[1]});
    }
    return poly;
}

/// Exact volume; 0 for lower-dimensional hulls.
inline Rat volume3(const Polytope3& p) {
    if (p.dim < 3) return Rat(0);
    Int six_vol = 0;
    for (const auto& f : p.facets) {
        const IntVec& a = p.points[f.cycle[0]];
        for (std::size_t i = 1; i + 1 < f.cycle.size(); ++i) {
            const IntVec& b = p.points[f.cycle[i]];
            const IntVec& c = p.points[f.cycle[i + 1]];
            six_vol += dot(a, cross3(b, c));
        }
    }
    return Rat(six_vol, 6);
}

}  // namespace troplift
