// Integer lattice kernel: primitive vectors, lattice lengths, spans and
// sublattice indices, and the canonical projection attached to a rational
// plane in Z^3. All subspaces are handled through their saturations.
#pragma once

#include <optional>
#include <stdexcept>

#include "troplift/linalg.hpp"

namespace troplift {

/// gcd of the coordinates (0 for the zero vector).
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = igcd(g, x);
    return g;
}

/// v divided by the gcd of its coordinates. Errors on the zero vector.
inline IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("zero direction");
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

/// Lattice length of the segment [p, q]: gcd of the coordinate differences.
inline Int lattice_length(const IntVec& p, const IntVec& q) {
    check_same_dim(p.size(), q.size());
    return content(sub(q, p));
}

/// Canonical sign: first nonzero coordinate positive.
inline IntVec canonical_sign(const IntVec& v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return neg(v);
    }
    return v;
}

/// True iff the lattice generated by all pairwise differences of `points`
/// is the full Z^n.
inline bool affine_span_is_full(const std::vector<IntVec>& points, int n) {
    if (points.empty()) throw std::invalid_argument("empty point list");
    for (const auto& p : points) check_same_dim(p.size(), static_cast<std::size_t>(n));
    IntMat diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    if (diffs.empty()) return n == 0;
    IntMat h = hnf_rows(diffs);
    if (static_cast<int>(h.size()) < n) return false;
    Int prod = 1;
    for (int i = 0; i < n; ++i) prod *= h[i][i];
    return prod == 1;
}

/// Index of the sublattice generated by `gens` in Z^n, or nullopt when the
/// generators do not span (index infinite). For n independent generators
/// this is |det|.
inline std::optional<Int> sublattice_index(const std::vector<IntVec>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    const std::size_t n = gens[0].size();
    for (const auto& g : gens) check_same_dim(g.size(), n);
    IntMat h = hnf_rows(gens);
    if (h.size() < n) return std::nullopt;
    Int prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= h[i][i];
    return prod;
}

// The projection of character lattices attached to a rational plane in R^3.
// `matrix` rows are the canonical (HNF) basis f1, f2 of the saturated
// rank-2 lattice L = U cap Z^3; the map sends u to (u.f1, u.f2). It is a
// surjection Z^3 -> Z^2 whose kernel is spanned by the primitive normal.
struct PlaneProjection {
    int source_dim = 3;
    int target_dim = 2;
    IntMat matrix;              // 2 x 3, rows f1, f2
    std::vector<IntVec> kernel_basis;  // one primitive normal vector

    IntVec apply(const IntVec& u) const {
        return IntVec{dot(matrix[0], u), dot(matrix[1], u)};
    }
    const IntVec& basis1() const { return matrix[0]; }
    const IntVec& basis2() const { return matrix[1]; }
};

/// Saturation basis of span{v1, v2} in Z^3, in HNF, plus the projection it
/// induces. Errors when v1, v2 are dependent.
inline PlaneProjection plane_projection(const IntVec& v1, const IntVec& v2) {
    check_same_dim(v1.size(), 3);
    check_same_dim(v2.size(), 3);
    IntVec n = cross3(v1, v2);
    if (is_zero(n)) throw std::invalid_argument("dependent span vectors");
    n = canonical_sign(primitive(n));
    // L = {x : n.x = 0} is the saturation of the span.
    IntMat basis = integer_kernel_basis(IntMat{n}, 3);
    basis = hnf_rows(basis);
    if (basis.size() != 2) throw std::logic_error("plane saturation rank != 2");
    PlaneProjection p;
    p.matrix = basis;
    p.kernel_basis = {n};
    return p;
}

/// Surjection Z^3 -> Z^2 with kernel the saturation of span{d}: quotient
/// coordinates transverse to a lattice line.
inline IntMat quotient_by_line(const IntVec& d) {
    check_same_dim(d.size(), 3);
    if (is_zero(d)) throw std::invalid_argument("zero direction");
    IntMat q = hnf_rows(integer_kernel_basis(IntMat{d}, 3));
    if (q.size() != 2) throw std::logic_error("line quotient rank != 2");
    return q;
}

/// Integer coordinates of `d` in the plane basis (f1, f2), when d lies in
/// the plane's saturated lattice.
inline std::optional<IntVec> in_plane_coords(const PlaneProjection& p, const IntVec& d) {
    RatMat a(3, RatVec(2));
    for (int i = 0; i < 3; ++i) {
        a[i][0] = Rat(p.basis1()[i]);
        a[i][1] = Rat(p.basis2()[i]);
    }
    auto x = rat_solve(a, to_rat(d));
    if (!x) return std::nullopt;
    // Verify it really solves (rat_solve only checks consistency) and is integral.
    for (int i = 0; i < 3; ++i)
        if ((*x)[0] * Rat(p.basis1()[i]) + (*x)[1] * Rat(p.basis2()[i]) != Rat(d[i]))
            return std::nullopt;
    if (!is_integer((*x)[0]) || !is_integer((*x)[1])) return std::nullopt;
    return IntVec{rat_num((*x)[0]), rat_num((*x)[1])};
}

/// Point of R^3 with the given coordinates in the plane basis.
inline RatVec from_plane_coords(const PlaneProjection& p, const RatVec& uv) {
    RatVec r(3);
    for (int i = 0; i < 3; ++i)
        r[i] = uv[0] * Rat(p.basis1()[i]) + uv[1] * Rat(p.basis2()[i]);
    return r;
}

namespace detail {

// All M in GL2(Z) with M a_i = b_i for two independent a's; solved exactly.
inline std::optional<IntMat> solve_gl2(const IntVec& a1, const IntVec& a2,
                                       const IntVec& b1, const IntVec& b2) {
    Int da = a1[0] * a2[1] - a1[1] * a2[0];
    if (da == 0) return std::nullopt;
    // M [a1 a2] = [b1 b2]  =>  M = [b1 b2] adj([a1 a2]) / det
    Int m00 = b1[0] * a2[1] - b2[0] * a1[1];
    Int m01 = -b1[0] * a2[0] + b2[0] * a1[0];
    Int m10 = b1[1] * a2[1] - b2[1] * a1[1];
    Int m11 = -b1[1] * a2[0] + b2[1] * a1[0];
    if (m00 % da != 0 || m01 % da != 0 || m10 % da != 0 || m11 % da != 0)
        return std::nullopt;
    IntMat m{{m00 / da, m01 / da}, {m10 / da, m11 / da}};
    Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) return std::nullopt;
    return m;
}

}  // namespace detail

/// Searches for M in GL2(Z) with M A = B as point sets (linear, no
/// translation). Point sets are deduplicated first.
inline std::optional<IntMat> unimodular_pointset_map(std::vector<IntVec> a,
                                                     std::vector<IntVec> b) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (a.size() != b.size()) return std::nullopt;
    auto image_matches = [&](const IntMat& m) {
        std::vector<IntVec> img;
        for (const auto& p : a)
            img.push_back(IntVec{m[0][0] * p[0] + m[0][1] * p[1],
                                 m[1][0] * p[0] + m[1][1] * p[1]});
        std::sort(img.begin(), img.end());
        return img == b;
    };
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            if (a[i][0] * a[j][1] - a[i][1] * a[j][0] == 0) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l) {
                    if (k == l) continue;
                    auto m = detail::solve_gl2(a[i], a[j], b[k], b[l]);
                    if (m && image_matches(*m)) return m;
                }
        }
    return std::nullopt;
}

}  // namespace troplift
