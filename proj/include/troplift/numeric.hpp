// Exact arithmetic base types for the whole library: arbitrary-precision
// integers and rationals. Nothing in the library uses floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace troplift {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int igcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Parses "p/q" or a plain integer literal. The denominator must be nonzero.
inline std::optional<Rat> parse_rat(const std::string& s) {
    auto parse_int = [](const std::string& t, Int& out) -> bool {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (std::size_t j = i; j < t.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
        out = Int(t);
        return true;
    };
    auto slash = s.find('/');
    Int num, den;
    if (slash == std::string::npos) {
        if (!parse_int(s, num)) return std::nullopt;
        return Rat(num);
    }
    if (!parse_int(s.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(s.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rat(num, den);
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (!is_integer(r)) os << '/' << rat_den(r);
    return os.str();
}

}  // namespace troplift
