// Regular subdivisions of lattice point configurations induced by rational
// lift heights. A cell is the set of points whose lifts lie on a common
// lower supporting affine function; top cells are enumerated by scanning
// affinely independent subsets, which is robust and exact at desk scale.
#pragma once

#include "troplift/polytope3.hpp"

namespace troplift {

struct SubdivCell {
    std::vector<int> support;  // point indices on the cell, sorted
    RatVec gradient;           // chart gradient of the supporting function
    Rat offset;
};

struct Subdivision {
    int ambient_dim = 0;
    int cell_dim = 0;  // affine dimension of the hull and of every cell
    std::vector<IntVec> points;
    std::vector<Rat> heights;
    std::vector<SubdivCell> cells;

    // Chart onto Z^cell_dim used when the hull is lower-dimensional:
    // point[i] = base + sum_k coords[i][k] * basis[k].
    IntVec base;
    IntMat basis;
    std::vector<IntVec> coords;
};

/// The regular subdivision selected by minimizing u.w + height(u): cells are
/// projections of the lower faces of the lifted hull. Equal heights give the
/// trivial subdivision. Errors on duplicate points.
inline Subdivision upper_hull_subdivision(const std::vector<IntVec>& points,
                                          const std::vector<Rat>& heights) {
    if (points.empty() || points.size() != heights.size())
        throw std::invalid_argument("points/heights size mismatch");
    const int dim = static_cast<int>(points[0].size());
    if (dim < 1 || dim > 3) throw std::invalid_argument("dimension must be 1..3");
    {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw std::invalid_argument("duplicate exponent point " + to_string(*dup));
    }

    Subdivision s;
    s.ambient_dim = dim;
    s.points = points;
    s.heights = heights;
    const int n = static_cast<int>(points.size());
    const int r = affine_rank(points);
    s.cell_dim = r;
    s.base = points[0];

    if (r == 0) {
        s.cells.push_back({{0}, RatVec{}, heights[0]});
        return s;
    }

    // Chart coordinates: identity when full-dimensional, else an HNF basis
    // of the difference lattice (all differences are integral in it).
    if (r == dim) {
        s.basis.assign(dim, IntVec(dim, 0));
        for (int i = 0; i < dim; ++i) s.basis[i][i] = 1;
        s.base = IntVec(dim, 0);
        s.coords = points;
    } else {
        IntMat diffs;
        for (int i = 1; i < n; ++i) diffs.push_back(sub(points[i], points[0]));
        s.basis = hnf_rows(diffs);
        RatMat bt(dim, RatVec(r));
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < r; ++k) bt[i][k] = Rat(s.basis[k][i]);
        for (int i = 0; i < n; ++i) {
            auto x = rat_solve(bt, to_rat(sub(points[i], s.base)));
            if (!x) throw std::logic_error("chart solve failed");
            IntVec c(r);
            for (int k = 0; k < r; ++k) {
                if (!is_integer((*x)[k])) throw std::logic_error("chart not integral");
                c[k] = rat_num((*x)[k]);
            }
            s.coords.push_back(c);
        }
    }

    // Enumerate candidate supporting functions from (r+1)-subsets.
    std::vector<int> pick(r + 1);
    std::vector<std::vector<int>> seen;
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == r + 1) {
            RatMat a(r + 1, RatVec(r + 1));
            RatVec b(r + 1);
            for (int i = 0; i <= r; ++i) {
                for (int k = 0; k < r; ++k) a[i][k] = Rat(s.coords[pick[i]][k]);
                a[i][r] = 1;
                b[i] = heights[pick[i]];
            }
            if (rat_rank(a) < r + 1) return;  // affinely dependent
            auto x = rat_solve(a, b);
            if (!x) return;
            RatVec g(x->begin(), x->begin() + r);
            Rat c0 = (*x)[r];
            std::vector<int> cell;
            for (int i = 0; i < n; ++i) {
                Rat l = c0;
                for (int k = 0; k < r; ++k) l += g[k] * Rat(s.coords[i][k]);
                if (heights[i] < l) return;  // not a lower face
                if (heights[i] == l) cell.push_back(i);
            }
            if (std::find(seen.begin(), seen.end(), cell) == seen.end()) {
                seen.push_back(cell);
                s.cells.push_back({cell, g, c0});
            }
            return;
        }
        for (int i = start; i < n; ++i) {
            pick[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);

    std::sort(s.cells.begin(), s.cells.end(),
              [](const SubdivCell& a, const SubdivCell& b) { return a.support < b.support; });
    return s;
}

/// True iff every top cell is a simplex whose edge vectors are a lattice
/// basis of their span (gcd of maximal minors equal to 1; determinant +-1
/// in the full-dimensional case).
inline bool is_unimodular_subdivision(const Subdivision& s) {
    const int r = s.cell_dim;
    for (const auto& cell : s.cells) {
        if (static_cast<int>(cell.support.size()) != r + 1) return false;
        if (r == 0) continue;
        IntMat edges;
        for (int i = 1; i <= r; ++i)
            edges.push_back(sub(s.points[cell.support[i]], s.points[cell.support[0]]));
        // gcd of all r x r minors
        const int dim = s.ambient_dim;
        std::vector<int> cols(r);
        Int g = 0;
        std::function<void(int, int)> rec = [&](int start, int chosen) {
            if (chosen == r) {
                IntMat m(r, IntVec(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) m[i][j] = edges[i][cols[j]];
                g = igcd(g, int_det(m));
                return;
            }
            for (int c = start; c < dim; ++c) {
                cols[chosen] = c;
                rec(c + 1, chosen + 1);
            }
        };
        rec(0, 0);
        if (g != 1) return false;
    }
    return true;
}

}  // namespace troplift
