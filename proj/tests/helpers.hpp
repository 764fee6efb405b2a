// Shared test utilities: seeded random generators for supports, planes,
// curves, and unimodular matrices. Everything is deterministic per seed.
#pragma once

#include <random>

#include "troplift/troplift.hpp"

namespace testutil {

using namespace troplift;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }
    Int uint(int lo, int hi) { return Int(uniform(lo, hi)); }
    IntVec ivec_n(int dim, int bound) {
        IntVec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = uint(-bound, bound);
        return v;
    }
    Rat small_rat(int num_bound, int max_den) {
        return Rat(uint(-num_bound, num_bound), uint(1, max_den));
    }
};

// Random valued support in Z^2 with distinct exponents, |A| in [2, max_terms].
inline ValuedSupport random_support2(Rng& rng, int max_terms, int coord_bound,
                                     bool constant_vals = false) {
    ValuedSupport f;
    f.dim = 2;
    int n = rng.uniform(2, max_terms);
    std::vector<IntVec> seen;
    while (static_cast<int>(f.terms.size()) < n) {
        IntVec u = rng.ivec_n(2, coord_bound);
        if (std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
        seen.push_back(u);
        f.terms.emplace_back(u, constant_vals ? Rat(0) : rng.small_rat(4, 3));
    }
    return f;
}

// Random constant-coefficient support in Z^3 with a full-dimensional hull.
inline ValuedSupport random_support3_fulldim(Rng& rng, int max_terms, int coord_bound) {
    while (true) {
        int n = rng.uniform(4, max_terms);
        std::vector<IntVec> pts;
        while (static_cast<int>(pts.size()) < n) {
            IntVec u = rng.ivec_n(3, coord_bound);
            if (std::find(pts.begin(), pts.end(), u) == pts.end()) pts.push_back(u);
        }
        if (affine_rank(pts) == 3) return constant_support(3, pts);
    }
}

inline PlaneProjection random_plane(Rng& rng, int bound = 3) {
    while (true) {
        IntVec v1 = rng.ivec_n(3, bound), v2 = rng.ivec_n(3, bound);
        if (is_zero(v1) || is_zero(v2) || is_zero(cross3(v1, v2))) continue;
        return plane_projection(v1, v2);
    }
}

inline LatticePolygon random_polygon(Rng& rng, int points, int bound) {
    while (true) {
        std::vector<IntVec> pts;
        for (int i = 0; i < points; ++i) pts.push_back(rng.ivec_n(2, bound));
        LatticePolygon p = hull2(pts);
        if (p.dim() == 2) return p;
    }
}

// Random GL3(Z) matrix as a short product of elementary operations.
inline IntMat random_unimodular3(Rng& rng, int ops = 6) {
    IntMat m(3, IntVec(3, 0));
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
    for (int k = 0; k < ops; ++k) {
        int i = rng.uniform(0, 2), j = rng.uniform(0, 2);
        if (i == j) continue;
        Int c = rng.uint(-2, 2);
        for (int col = 0; col < 3; ++col) m[i][col] += c * m[j][col];
    }
    if (rng.uniform(0, 1)) std::swap(m[0], m[1]);
    return m;
}

inline RatVec origin(int dim) { return RatVec(dim, Rat(0)); }

inline WeightedFan1 standard_line_fan() {
    return make_fan(2, {{ivec({1, 0}), 1}, {ivec({0, 1}), 1}, {ivec({-1, -1}), 1}});
}

}  // namespace testutil
