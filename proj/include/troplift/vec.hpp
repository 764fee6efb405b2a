// Small integer and rational vectors (dimension 1-3) with exact arithmetic.
#pragma once

#include <stdexcept>
#include <vector>

#include "troplift/numeric.hpp"

namespace troplift {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline IntVec ivec(std::initializer_list<long long> xs) {
    IntVec v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

inline RatVec rvec(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline void check_same_dim(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("dimension mismatch");
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    check_same_dim(a.size(), b.size());
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    check_same_dim(a.size(), b.size());
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec scale(const Int& k, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    check_same_dim(a.size(), b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec cross3(const IntVec& a, const IntVec& b) {
    check_same_dim(a.size(), 3);
    check_same_dim(b.size(), 3);
    return IntVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                  a[0] * b[1] - a[1] * b[0]};
}

inline RatVec to_rat(const IntVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

inline RatVec radd(const RatVec& a, const RatVec& b) {
    check_same_dim(a.size(), b.size());
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec rsub(const RatVec& a, const RatVec& b) {
    check_same_dim(a.size(), b.size());
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec rscale(const Rat& k, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline Rat rdot(const RatVec& a, const RatVec& b) {
    check_same_dim(a.size(), b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat rdot(const IntVec& a, const RatVec& b) {
    check_same_dim(a.size(), b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

// Clears denominators and divides out the content: the primitive integer
// vector pointing in the direction of a nonzero rational vector.
inline IntVec primitive_direction(const RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v) lcm = lcm / igcd(lcm, rat_den(x)) * rat_den(x);
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = rat_num(v[i]) * (lcm / rat_den(v[i]));
    Int g = 0;
    for (const auto& x : w) g = igcd(g, x);
    if (g == 0) throw std::invalid_argument("zero direction");
    for (auto& x : w) x /= g;
    return w;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace troplift
