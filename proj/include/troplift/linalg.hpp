// Exact linear algebra on small integer and rational matrices: Hermite
// normal form, integer kernels, determinants, Gaussian elimination.
// Matrices are row vectors; everything is desk-scale (dimension <= 4).
#pragma once

#include <optional>
#include <vector>

#include "troplift/vec.hpp"

namespace troplift {

using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

// Floor division with remainder in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Row-style Hermite normal form. Pivots are positive, entries above a pivot
// are reduced into [0, pivot), pivot columns strictly increase. Returns the
// reduced matrix (zero rows dropped) whose rows generate the same lattice.
inline IntMat hnf_rows(IntMat a) {
    if (a.empty()) return a;
    const std::size_t n = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < a.size(); ++col) {
        // Clear the column below row r by gcd steps.
        while (true) {
            std::size_t best = a.size();
            for (std::size_t i = r; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                if (best == a.size() ||
                    iabs(a[i][col]) < iabs(a[best][col]))
                    best = i;
            }
            if (best == a.size()) break;
            std::swap(a[r], a[best]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                Int q = floor_div(a[i][col], a[r][col]);
                for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
                if (a[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[r][col] == 0) continue;
        if (a[r][col] < 0)
            for (std::size_t j = 0; j < n; ++j) a[r][j] = -a[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a[i][col], a[r][col]);
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

inline int int_rank(const IntMat& a) { return static_cast<int>(hnf_rows(a).size()); }

// Basis of the integer kernel {x : a x = 0}; always a saturated sublattice.
inline IntMat integer_kernel_basis(const IntMat& a, std::size_t n) {
    // Column elimination on a, mirroring the operations on an identity
    // matrix; kernel basis = identity columns matching zeroed columns.
    IntMat w = a;
    IntMat u(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    const std::size_t m = w.size();
    auto col_is_zero = [&](std::size_t c, std::size_t from_row) {
        for (std::size_t i = from_row; i < m; ++i)
            if (w[i][c] != 0) return false;
        return true;
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < m; ++i) std::swap(w[i][c1], w[i][c2]);
        for (std::size_t i = 0; i < n; ++i) std::swap(u[i][c1], u[i][c2]);
    };
    auto axpy_col = [&](std::size_t dst, const Int& q, std::size_t src) {
        for (std::size_t i = 0; i < m; ++i) w[i][dst] -= q * w[i][src];
        for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
    };
    std::size_t c = 0;
    for (std::size_t row = 0; row < m && c < n; ++row) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = c; j < n; ++j) {
                if (w[row][j] == 0) continue;
                if (best == n || iabs(w[row][j]) < iabs(w[row][best])) best = j;
            }
            if (best == n) break;
            swap_cols(c, best);
            bool cleared = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (w[row][j] == 0) continue;
                Int q = floor_div(w[row][j], w[row][c]);
                axpy_col(j, q, c);
                if (w[row][j] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (w[row][c] != 0) ++c;
    }
    IntMat kernel;
    for (std::size_t j = c; j < n; ++j) {
        if (!col_is_zero(j, 0)) continue;
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
        kernel.push_back(v);
    }
    return kernel;
}

inline Int int_det(const IntMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Int d = 0;
    IntMat minor(n - 1, IntVec(n - 1));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor[i - 1][cj++] = a[i][j];
            }
        }
        Int term = a[0][k] * int_det(minor);
        d += (k % 2 == 0) ? term : -term;
    }
    return d;
}

// One solution of a x = b over the rationals, or nullopt if inconsistent.
inline std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = m;
        for (std::size_t i = r; i < m; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p == m) continue;
        std::swap(a[r], a[p]);
        std::swap(b[r], b[p]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

inline int rat_rank(RatMat a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = m;
        for (std::size_t i = r; i < m; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p == m) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline int rat_rank_of_int(const IntMat& a) {
    RatMat q;
    q.reserve(a.size());
    for (const auto& row : a) q.push_back(to_rat(row));
    return rat_rank(q);
}

// Rank of the linear span of the differences p_i - p_0.
template <typename V>
inline int affine_rank(const std::vector<V>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec d(pts[0].size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = Rat(pts[i][j]) - Rat(pts[0][j]);
        diffs.push_back(d);
    }
    return rat_rank(diffs);
}

}  // namespace troplift
