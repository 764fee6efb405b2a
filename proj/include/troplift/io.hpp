// JSON problem files: parsing with first-error path diagnostics, and
// serialization that round-trips exactly. All numerals are exact: JSON
// integers or "p/q" strings; floats are rejected.
#pragma once

#include <json.hpp>

#include "troplift/obstruct.hpp"

namespace troplift {

using json = nlohmann::json;

struct ProblemError : std::runtime_error {
    explicit ProblemError(const std::string& what) : std::runtime_error(what) {}
};

struct LineSpec {
    IntVec direction;
    Int weight = 1;
    RatVec base;  // defaults to the origin
};

struct ProblemFile {
    std::optional<ValuedSupport> surface;
    std::optional<PolyhedralCurve> curve;
    std::optional<std::pair<IntVec, IntVec>> plane_span;
    std::optional<LineSpec> line;
    std::string task;
};

namespace detail_io {

inline Rat parse_exact(const json& j, const std::string& path) {
    if (j.is_number_integer())
        return Rat(Int(j.get<long long>()));
    if (j.is_string()) {
        auto r = parse_rat(j.get<std::string>());
        if (!r) throw ProblemError(path + ": not a rational numeral: " + j.dump());
        return *r;
    }
    throw ProblemError(path + ": numerals must be integers or \"p/q\" strings, got " + j.dump());
}

inline Int parse_int(const json& j, const std::string& path) {
    Rat r = parse_exact(j, path);
    if (!is_integer(r)) throw ProblemError(path + ": expected an integer, got " + to_string(r));
    return rat_num(r);
}

inline IntVec parse_ivec(const json& j, const std::string& path, int dim = -1) {
    if (!j.is_array()) throw ProblemError(path + ": expected an array");
    if (dim >= 0 && static_cast<int>(j.size()) != dim)
        throw ProblemError(path + ": expected " + std::to_string(dim) + " entries");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline RatVec parse_rvec(const json& j, const std::string& path, int dim = -1) {
    if (!j.is_array()) throw ProblemError(path + ": expected an array");
    if (dim >= 0 && static_cast<int>(j.size()) != dim)
        throw ProblemError(path + ": expected " + std::to_string(dim) + " entries");
    RatVec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_exact(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline json rat_json(const Rat& r) {
    if (is_integer(r) && iabs(rat_num(r)) < Int(1) << 53)
        return json(rat_num(r).convert_to<long long>());
    return json(to_string(r));
}

inline json ivec_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(Rat(x)));
    return a;
}

inline json rvec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_json(x));
    return a;
}

}  // namespace detail_io

inline ValuedSupport parse_surface(const json& j, const std::string& path) {
    if (!j.is_object()) throw ProblemError(path + ": expected an object");
    ValuedSupport f;
    f.dim = j.contains("dim") ? static_cast<int>(detail_io::parse_int(j["dim"], path + ".dim"))
                              : 3;
    if (f.dim != 2 && f.dim != 3) throw ProblemError(path + ".dim: must be 2 or 3");
    if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
        throw ProblemError(path + ".terms: expected a nonempty array");
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
        const json& t = j["terms"][i];
        std::string tp = path + ".terms[" + std::to_string(i) + "]";
        if (!t.is_object() || !t.contains("exp"))
            throw ProblemError(tp + ": expected {\"exp\": [...], \"val\": ...}");
        IntVec e = detail_io::parse_ivec(t["exp"], tp + ".exp", f.dim);
        Rat v = t.contains("val") ? detail_io::parse_exact(t["val"], tp + ".val") : Rat(0);
        for (const auto& [u, h] : f.terms)
            if (u == e) throw ProblemError(tp + ".exp: duplicate exponent " + to_string(e));
        f.terms.emplace_back(e, v);
    }
    return f;
}

inline PolyhedralCurve parse_curve(const json& j, const std::string& path, int dim) {
    if (!j.is_object()) throw ProblemError(path + ": expected an object");
    PolyhedralCurve c;
    c.ambient_dim = dim;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ProblemError(path + ".vertices: expected an array");
    for (std::size_t i = 0; i < j["vertices"].size(); ++i)
        c.vertices.push_back(detail_io::parse_rvec(j["vertices"][i],
                                                   path + ".vertices[" + std::to_string(i) + "]",
                                                   dim));
    auto check_vi = [&](const Int& v, const std::string& p) {
        if (v < 0 || v >= Int(static_cast<long>(c.vertices.size())))
            throw ProblemError(p + ": vertex index out of range");
        return static_cast<int>(v.convert_to<long>());
    };
    if (j.contains("edges")) {
        for (std::size_t i = 0; i < j["edges"].size(); ++i) {
            std::string p = path + ".edges[" + std::to_string(i) + "]";
            const json& e = j["edges"][i];
            if (!e.is_array() || e.size() != 3)
                throw ProblemError(p + ": expected [vi, vj, weight]");
            int a = check_vi(detail_io::parse_int(e[0], p), p);
            int b = check_vi(detail_io::parse_int(e[1], p), p);
            if (a == b) throw ProblemError(p + ": edge endpoints must differ");
            Int w = detail_io::parse_int(e[2], p);
            if (w < 1) throw ProblemError(p + ": weight must be positive");
            c.edges.push_back({a, b, w});
        }
    }
    if (j.contains("rays")) {
        for (std::size_t i = 0; i < j["rays"].size(); ++i) {
            std::string p = path + ".rays[" + std::to_string(i) + "]";
            const json& r = j["rays"][i];
            if (!r.is_array() || r.size() != 3)
                throw ProblemError(p + ": expected [vi, [dir], weight]");
            int b = check_vi(detail_io::parse_int(r[0], p), p);
            IntVec d = detail_io::parse_ivec(r[1], p + "[1]", dim);
            if (is_zero(d)) throw ProblemError(p + ": zero ray direction");
            Int w = detail_io::parse_int(r[2], p);
            if (w < 1) throw ProblemError(p + ": weight must be positive");
            c.rays.push_back({b, primitive(d), w});
        }
    }
    return c;
}

/// Parses and validates a problem file; throws ProblemError naming the
/// first offending path.
inline ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProblemError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ProblemError("top level: expected an object");
    ProblemFile p;
    if (j.contains("surface")) p.surface = parse_surface(j["surface"], "surface");
    if (j.contains("curve")) {
        int dim = p.surface ? p.surface->dim : 3;
        p.curve = parse_curve(j["curve"], "curve", dim);
    }
    if (j.contains("plane")) {
        const json& pl = j["plane"];
        if (!pl.is_object() || !pl.contains("span") || !pl["span"].is_array() ||
            pl["span"].size() != 2)
            throw ProblemError("plane.span: expected two spanning vectors");
        IntVec v1 = detail_io::parse_ivec(pl["span"][0], "plane.span[0]", 3);
        IntVec v2 = detail_io::parse_ivec(pl["span"][1], "plane.span[1]", 3);
        p.plane_span = {v1, v2};
    }
    if (j.contains("line")) {
        const json& ln = j["line"];
        if (!ln.is_object() || !ln.contains("direction"))
            throw ProblemError("line: expected {\"direction\": [...], ...}");
        LineSpec ls;
        ls.direction = detail_io::parse_ivec(ln["direction"], "line.direction", 3);
        if (is_zero(ls.direction)) throw ProblemError("line.direction: zero direction");
        if (ln.contains("weight")) ls.weight = detail_io::parse_int(ln["weight"], "line.weight");
        if (ls.weight < 1) throw ProblemError("line.weight: must be positive");
        ls.base = ln.contains("base") ? detail_io::parse_rvec(ln["base"], "line.base", 3)
                                      : RatVec(3, Rat(0));
        p.line = ls;
    }
    if (j.contains("task")) {
        if (!j["task"].is_string()) throw ProblemError("task: expected a string");
        p.task = j["task"].get<std::string>();
    }
    return p;
}

inline json surface_json(const ValuedSupport& f) {
    json terms = json::array();
    for (const auto& [u, v] : f.terms)
        terms.push_back({{"exp", detail_io::ivec_json(u)}, {"val", detail_io::rat_json(v)}});
    return {{"dim", f.dim}, {"terms", terms}};
}

inline json curve_json(const PolyhedralCurve& c) {
    json verts = json::array(), edges = json::array(), rays = json::array();
    for (const auto& v : c.vertices) verts.push_back(detail_io::rvec_json(v));
    for (const auto& e : c.edges)
        edges.push_back({e.a, e.b, detail_io::rat_json(Rat(e.weight))});
    for (const auto& r : c.rays)
        rays.push_back({r.base, detail_io::ivec_json(r.dir), detail_io::rat_json(Rat(r.weight))});
    return {{"vertices", verts}, {"edges", edges}, {"rays", rays}};
}

inline json problem_json(const ProblemFile& p) {
    json j = json::object();
    if (p.surface) j["surface"] = surface_json(*p.surface);
    if (p.curve) j["curve"] = curve_json(*p.curve);
    if (p.plane_span)
        j["plane"] = {{"span", json::array({detail_io::ivec_json(p.plane_span->first),
                                            detail_io::ivec_json(p.plane_span->second)})}};
    if (p.line) {
        json ln = {{"direction", detail_io::ivec_json(p.line->direction)},
                   {"weight", detail_io::rat_json(Rat(p.line->weight))}};
        if (!is_zero(p.line->base)) ln["base"] = detail_io::rvec_json(p.line->base);
        j["line"] = ln;
    }
    if (!p.task.empty()) j["task"] = p.task;
    return j;
}

inline json fan_json(const WeightedFan1& f) {
    json rays = json::array();
    for (const auto& [d, w] : f.rays)
        rays.push_back({{"dir", detail_io::ivec_json(d)}, {"weight", detail_io::rat_json(Rat(w))}});
    return rays;
}

}  // namespace troplift
