// Independent brute-force implementations used to anchor expected values
// and to power property tests: exhaustive hulls, Minkowski summand
// enumeration, coset counting, determinantal-divisor indices, lattice
// point enumeration. These deliberately avoid the fast code paths they
// cross-check, and they ship in the library so the CLI --verify flag can
// re-derive verdict inputs two ways.
#pragma once

#include <functional>

#include "troplift/polygon.hpp"

namespace troplift {
namespace oracle {

namespace detail {

inline bool in_convex_hull_2d(const IntVec& p, const std::vector<IntVec>& s) {
    // Caratheodory: p lies in some point/segment/triangle spanned by s.
    for (const auto& a : s)
        if (a == p) return true;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (cross2(s[i], s[j], p) != 0) continue;
            Int lo0 = std::min(s[i][0], s[j][0]), hi0 = std::max(s[i][0], s[j][0]);
            Int lo1 = std::min(s[i][1], s[j][1]), hi1 = std::max(s[i][1], s[j][1]);
            if (p[0] >= lo0 && p[0] <= hi0 && p[1] >= lo1 && p[1] <= hi1) return true;
        }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                Int s1 = cross2(s[i], s[j], p);
                Int s2 = cross2(s[j], s[k], p);
                Int s3 = cross2(s[k], s[i], p);
                if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0))
                    return true;
            }
    return false;
}

// Angular order, counterclockwise starting just after direction (1,0).
inline bool angle_less(const IntVec& a, const IntVec& b) {
    auto half = [](const IntVec& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace detail

/// Hull by the extreme-point definition: p is a vertex iff it is not in the
/// hull of the others. Must agree with hull2.
inline LatticePolygon brute_hull2(std::vector<IntVec> pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    if (pts.size() > 100) throw std::invalid_argument("brute hull size cap exceeded");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<IntVec> extreme;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !detail::in_convex_hull_2d(pts[i], others))
            extreme.push_back(pts[i]);
    }
    LatticePolygon poly;
    if (extreme.size() <= 2) {
        poly.verts = extreme;
        return poly;
    }
    // Order counterclockwise around the centroid (scaled to stay integral).
    Int n(static_cast<long>(extreme.size()));
    IntVec c{0, 0};
    for (const auto& p : extreme) c = add(c, p);
    std::sort(extreme.begin(), extreme.end(), [&](const IntVec& a, const IntVec& b) {
        IntVec va = sub(scale(n, a), c), vb = sub(scale(n, b), c);
        return detail::angle_less(va, vb);
    });
    auto mn = std::min_element(extreme.begin(), extreme.end());
    std::rotate(extreme.begin(), mn, extreme.end());
    poly.verts = extreme;
    return poly;
}

/// All Minkowski decompositions P = G + H up to translation, found by
/// splitting every edge m*u into (k*u, (m-k)*u) and keeping the splits
/// whose parts close up. Pairs are unordered and include the trivial
/// (point, P) decomposition.
inline std::vector<std::pair<LatticePolygon, LatticePolygon>> enumerate_minkowski_summands(
    const LatticePolygon& p) {
    auto edges = polygon_edges(p);
    Int total = 0;
    for (const auto& e : edges) total += e.length;
    if (total > 30) throw std::invalid_argument("summand enumeration length cap exceeded");

    auto walk = [](const std::vector<std::pair<IntVec, Int>>& parts) {
        std::vector<IntVec> cum{ivec({0, 0})};
        for (const auto& [d, k] : parts)
            if (k > 0) cum.push_back(add(cum.back(), scale(k, d)));
        cum.pop_back();  // closes back to the start
        if (cum.empty()) cum.push_back(ivec({0, 0}));
        return normalize_translation(hull2(cum));
    };

    std::vector<std::pair<LatticePolygon, LatticePolygon>> out;
    std::vector<Int> k(edges.size(), Int(0));
    while (true) {
        IntVec s{0, 0};
        for (std::size_t i = 0; i < edges.size(); ++i)
            s = add(s, scale(k[i], edges[i].direction));
        if (is_zero(s)) {
            std::vector<std::pair<IntVec, Int>> g, h;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                g.emplace_back(edges[i].direction, k[i]);
                h.emplace_back(edges[i].direction, edges[i].length - k[i]);
            }
            LatticePolygon pg = walk(g), ph = walk(h);
            if (ph.verts < pg.verts) std::swap(pg, ph);
            if (std::find(out.begin(), out.end(), std::make_pair(pg, ph)) == out.end())
                out.emplace_back(pg, ph);
        }
        // next multi-index
        std::size_t i = 0;
        for (; i < edges.size(); ++i) {
            if (k[i] < edges[i].length) {
                ++k[i];
                break;
            }
            k[i] = 0;
        }
        if (i == edges.size()) break;
    }
    return out;
}

/// Index of the sublattice generated by `gens` in Z^n, by counting residue
/// classes in the finite quotient (Z/M)^n by the generated subgroup, where
/// M*Z^n is contained in the lattice.
inline Int coset_index(const std::vector<IntVec>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    const int n = static_cast<int>(gens[0].size());
    // an n-subset with nonzero determinant gives the modulus
    Int m = 0;
    std::vector<int> pick(n);
    std::function<bool(int, int)> find = [&](int start, int chosen) {
        if (chosen == n) {
            IntMat sq;
            for (int i = 0; i < n; ++i) sq.push_back(gens[pick[i]]);
            Int d = iabs(int_det(sq));
            if (d != 0) {
                m = d;
                return true;
            }
            return false;
        }
        for (int i = start; i < static_cast<int>(gens.size()); ++i) {
            pick[chosen] = i;
            if (find(i + 1, chosen + 1)) return true;
        }
        return false;
    };
    if (!find(0, 0)) throw std::invalid_argument("rank deficient generators");

    long long mod = m.convert_to<long long>();
    long long group = 1;
    for (int i = 0; i < n; ++i) {
        group *= mod;
        if (group > 4'000'000) throw std::invalid_argument("coset enumeration cap exceeded");
    }
    auto encode = [&](const std::vector<long long>& x) {
        long long idx = 0;
        for (int i = n - 1; i >= 0; --i) idx = idx * mod + x[i];
        return idx;
    };
    std::vector<char> seen(static_cast<std::size_t>(group), 0);
    std::vector<std::vector<long long>> queue{std::vector<long long>(n, 0)};
    seen[0] = 1;
    long long size = 0;
    while (!queue.empty()) {
        auto x = queue.back();
        queue.pop_back();
        ++size;
        for (const auto& g : gens) {
            std::vector<long long> y(n);
            for (int i = 0; i < n; ++i) {
                long long gi = (g[i] % m).convert_to<long long>();
                y[i] = ((x[i] + gi) % mod + mod) % mod;
            }
            long long code = encode(y);
            if (!seen[static_cast<std::size_t>(code)]) {
                seen[static_cast<std::size_t>(code)] = 1;
                queue.push_back(y);
            }
        }
    }
    return Int(group / size);
}

/// Sublattice index through determinantal divisors: the gcd of all n x n
/// minors of the generator matrix. nullopt when rank deficient.
inline std::optional<Int> minor_gcd_index(const std::vector<IntVec>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    const int n = static_cast<int>(gens[0].size());
    if (static_cast<int>(gens.size()) < n) return std::nullopt;
    Int g = 0;
    std::vector<int> pick(n);
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == n) {
            IntMat sq;
            for (int i = 0; i < n; ++i) sq.push_back(gens[pick[i]]);
            g = igcd(g, int_det(sq));
            return;
        }
        for (int i = start; i < static_cast<int>(gens.size()); ++i) {
            pick[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);
    if (g == 0) return std::nullopt;
    return g;
}

/// Lattice points on the closed segment [p, q], by scanning the bounding
/// box (coordinates capped at 20).
inline Int count_segment_lattice_points(const IntVec& p, const IntVec& q) {
    for (const auto& x : p)
        if (iabs(x) > 20) throw std::invalid_argument("coordinate cap exceeded");
    for (const auto& x : q)
        if (iabs(x) > 20) throw std::invalid_argument("coordinate cap exceeded");
    check_same_dim(p.size(), q.size());
    const int n = static_cast<int>(p.size());
    IntVec d = sub(q, p);
    Int count = 0;
    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = std::min(p[i], q[i]);
        hi[i] = std::max(p[i], q[i]);
    }
    IntVec r = lo;
    while (true) {
        IntVec pr = sub(r, p);
        bool collinear = true;
        for (int i = 0; i < n && collinear; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pr[i] * d[j] - pr[j] * d[i] != 0) {
                    collinear = false;
                    break;
                }
        if (collinear) {
            Int t_num = dot(pr, d), t_den = dot(d, d);
            bool between = (t_den == 0) ? is_zero(pr) : (t_num >= 0 && t_num <= t_den);
            if (between) ++count;
        }
        int i = 0;
        for (; i < n; ++i) {
            if (r[i] < hi[i]) {
                ++r[i];
                break;
            }
            r[i] = lo[i];
        }
        if (i == n) break;
    }
    return count;
}

/// Visits every convex lattice polygon (2-dimensional, up to translation)
/// whose edge vectors have total taxicab length at most `budget`: closed
/// distinct-direction edge multisets walked in angular order.
inline void for_each_small_polygon(int budget,
                                   const std::function<void(const LatticePolygon&)>& fn) {
    std::vector<IntVec> dirs;
    for (int x = -budget; x <= budget; ++x)
        for (int y = -budget; y <= budget; ++y) {
            if (x == 0 && y == 0) continue;
            if (std::abs(x) + std::abs(y) > budget) continue;
            IntVec v = ivec({x, y});
            if (content(v) == 1) dirs.push_back(v);
        }
    std::sort(dirs.begin(), dirs.end(), detail::angle_less);

    std::vector<std::pair<IntVec, Int>> chosen;
    std::function<void(std::size_t, IntVec, int)> rec = [&](std::size_t i, IntVec sum, int rem) {
        Int l1 = iabs(sum[0]) + iabs(sum[1]);
        if (l1 > rem) return;  // cannot close any more
        if (i == dirs.size()) {
            if (!is_zero(sum) || chosen.size() < 3) return;
            std::vector<IntVec> cum{ivec({0, 0})};
            for (const auto& [d, k] : chosen) cum.push_back(add(cum.back(), scale(k, d)));
            cum.pop_back();
            fn(normalize_translation(hull2(cum)));
            return;
        }
        rec(i + 1, sum, rem);
        int cost = static_cast<int>((iabs(dirs[i][0]) + iabs(dirs[i][1])).convert_to<long>());
        IntVec s = sum;
        for (int k = 1; k * cost <= rem; ++k) {
            s = add(s, dirs[i]);
            chosen.emplace_back(dirs[i], Int(k));
            rec(i + 1, s, rem - k * cost);
            chosen.pop_back();
        }
    };
    rec(0, ivec({0, 0}), budget);
}

}  // namespace oracle
}  // namespace troplift
