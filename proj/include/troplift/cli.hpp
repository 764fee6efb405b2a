// Library side of the command line: one entry point per subcommand, text
// and JSON rendering, oracle double-runs behind --verify, figure data
// export. Output is deterministic: points and rays are canonically ordered
// and reports carry the seed they used.
#pragma once

#include <fstream>
#include <iomanip>

#include "troplift/io.hpp"
#include "troplift/oracle.hpp"

namespace troplift {

struct RunOptions {
    std::string format = "text";  // "text" or "json"
    std::uint64_t seed = 1;
    bool verify = false;
    std::string emit_fig;  // path, empty = off
};

struct Report {
    int exit_code = 0;  // 0 computed / no obstruction, 2 obstruction found
    json data;
    std::string text;

    std::string rendered(const RunOptions& opt) const {
        return opt.format == "json" ? data.dump(2) + "\n" : text;
    }
};

namespace detail_cli {

inline std::string fan_text(const WeightedFan1& f) {
    std::string s;
    for (const auto& [d, w] : f.rays) {
        if (!s.empty()) s += "  ";
        s += to_string(d) + "*" + to_string(w);
    }
    return s.empty() ? "(empty)" : s;
}

inline std::string verdict_label(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Obstructed: return "OBSTRUCTED";
        case VerdictKind::PassesLocalTest:
            return "passes (multiple k=" + to_string(v.multiple) + ")";
        case VerdictKind::EscapeClassicalSegment:
            return "inconclusive: classical segment " + to_string(v.escape_direction);
        case VerdictKind::NotApplicable: return "not applicable";
    }
    return "?";
}

inline json verdict_json(const Verdict& v) {
    json j;
    j["kind"] = to_string(v.kind);
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.kind == VerdictKind::PassesLocalTest) j["multiple"] = detail_io::rat_json(Rat(v.multiple));
    if (v.kind == VerdictKind::EscapeClassicalSegment)
        j["segment_direction"] = detail_io::ivec_json(v.escape_direction);
    if (v.has_fans) {
        j["curve_star"] = fan_json(v.curve_star);
        j["stable_fan"] = fan_json(v.stable_fan);
        if (v.plane)
            j["plane_basis"] = json::array({detail_io::ivec_json(v.plane->basis1()),
                                            detail_io::ivec_json(v.plane->basis2())});
    }
    return j;
}

inline void emit_fig_file(const std::string& path, const WeightedFan1& stable,
                          const WeightedFan1& star) {
    json fig;
    auto polylines = [](const WeightedFan1& f) {
        json out = json::array();
        for (const auto& [d, w] : f.rays)
            out.push_back({{"polyline", json::array({json::array({0, 0}), detail_io::ivec_json(d)})},
                           {"weight", detail_io::rat_json(Rat(w))}});
        return out;
    };
    fig["stable_fan"] = polylines(stable);
    fig["curve_star"] = polylines(star);
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write figure file " + path);
    os << fig.dump(2) << "\n";
}

}  // namespace detail_cli

inline Report run_hypersurface(const ProblemFile& p, const RunOptions& opt) {
    if (!p.surface) throw ProblemError("hypersurface: missing \"surface\"");
    const ValuedSupport& f = *p.surface;
    Report rep;
    rep.data["task"] = "hypersurface";
    std::string txt;
    if (f.dim == 2) {
        TropCurve2 t = trop_curve2(f);
        if (opt.verify) {
            if (!(oracle::brute_hull2(f.exponents()) == hull2(f.exponents())))
                throw std::logic_error("verify: hull oracle disagrees");
            if (!curve_complex_balanced(t)) throw std::logic_error("verify: complex unbalanced");
            rep.data["verified"] = true;
        }
        json verts = json::array(), edges = json::array(), rays = json::array();
        txt += "tropical plane curve\n";
        for (std::size_t i = 0; i < t.complex.vertices.size(); ++i) {
            verts.push_back(detail_io::rvec_json(t.complex.vertices[i]));
            txt += "  vertex " + std::to_string(i) + "  " + to_string(t.complex.vertices[i]) + "\n";
        }
        for (const auto& e : t.complex.edges) {
            edges.push_back({e.a, e.b, detail_io::rat_json(Rat(e.weight))});
            txt += "  edge   " + std::to_string(e.a) + "-" + std::to_string(e.b) + "  weight " +
                   to_string(e.weight) + "\n";
        }
        for (const auto& r : t.complex.rays) {
            rays.push_back({r.base, detail_io::ivec_json(r.dir), detail_io::rat_json(Rat(r.weight))});
            txt += "  ray    " + std::to_string(r.base) + " -> " + to_string(r.dir) + "  weight " +
                   to_string(r.weight) + "\n";
        }
        rep.data["vertices"] = verts;
        rep.data["edges"] = edges;
        rep.data["rays"] = rays;
        rep.data["dual_cells"] = t.dual.cells.size();
    } else {
        TropSurface3 t = trop_surface3(f);
        if (opt.verify) {
            if (!surface_balanced(t)) throw std::logic_error("verify: surface unbalanced");
            rep.data["verified"] = true;
        }
        json verts = json::array(), edges = json::array(), rays = json::array(),
             cells = json::array();
        txt += "tropical surface (1-skeleton and 2-cell weights)\n";
        for (std::size_t i = 0; i < t.vertices.size(); ++i) {
            verts.push_back(detail_io::rvec_json(t.vertices[i]));
            txt += "  vertex " + std::to_string(i) + "  " + to_string(t.vertices[i]) + "\n";
        }
        for (const auto& e : t.edges) {
            edges.push_back({e.a, e.b});
            txt += "  edge   " + std::to_string(e.a) + "-" + std::to_string(e.b) + "\n";
        }
        for (const auto& r : t.rays) {
            rays.push_back({r.base, detail_io::ivec_json(r.dir)});
            txt += "  ray    " + std::to_string(r.base) + " -> " + to_string(r.dir) + "\n";
        }
        for (const auto& c : t.cells2) {
            json supp = json::array();
            for (int i : c.face_support) supp.push_back(detail_io::ivec_json(t.dual.points[i]));
            cells.push_back({{"dual_edge", supp}, {"weight", detail_io::rat_json(Rat(c.weight))}});
        }
        txt += "  2-cells: " + std::to_string(t.cells2.size()) + "\n";
        rep.data["vertices"] = verts;
        rep.data["edges"] = edges;
        rep.data["rays"] = rays;
        rep.data["cells2"] = cells;
    }
    rep.text = txt;
    return rep;
}

inline Report run_stable_int(const ProblemFile& p, const RunOptions& opt) {
    if (!p.surface) throw ProblemError("stable-int: missing \"surface\"");
    if (!p.plane_span) throw ProblemError("stable-int: missing \"plane\"");
    if (p.surface->dim != 3) throw ProblemError("stable-int: surface must live in Z^3");
    PlaneProjection proj = plane_projection(p.plane_span->first, p.plane_span->second);
    StablePlaneFan res = stable_intersection_with_plane(*p.surface, proj);
    Report rep;
    rep.data["task"] = "stable-int";
    rep.data["seed"] = opt.seed;
    rep.data["plane_basis"] = json::array(
        {detail_io::ivec_json(proj.basis1()), detail_io::ivec_json(proj.basis2())});
    json img = json::array();
    for (const auto& b : res.image) img.push_back(detail_io::ivec_json(b));
    rep.data["projected_support"] = img;
    rep.data["fan"] = fan_json(res.fan);
    std::string txt = "stable intersection with the plane spanned by " +
                      to_string(proj.basis1()) + ", " + to_string(proj.basis2()) + "\n";
    txt += "  projected support:";
    for (const auto& b : res.image) txt += " " + to_string(b);
    txt += "\n  fan: " + detail_cli::fan_text(res.fan) + "\n";
    if (res.diagnostic) {
        rep.data["diagnostic"] = *res.diagnostic;
        txt += "  note: " + *res.diagnostic + "\n";
    }
    if (opt.verify) {
        WeightedFan1 fan2 = stable_intersection_perturbed(*p.surface, proj, opt.seed);
        if (!(fan2 == res.fan))
            throw std::logic_error("verify: perturbation route disagrees with projection route");
        rep.data["verified"] = true;
        txt += "  verified against the perturbation route (seed " + std::to_string(opt.seed) + ")\n";
    }
    if (!opt.emit_fig.empty()) detail_cli::emit_fig_file(opt.emit_fig, res.fan, WeightedFan1{});
    rep.text = txt;
    return rep;
}

inline Report run_check_lift(const ProblemFile& p, const RunOptions& opt) {
    if (!p.surface) throw ProblemError("check-lift: missing \"surface\"");
    if (!p.curve) throw ProblemError("check-lift: missing \"curve\"");
    GlobalVerdict gv = lift_verdict_global(*p.surface, *p.curve);
    Report rep;
    rep.data["task"] = "check-lift";
    rep.data["seed"] = opt.seed;
    json pts = json::array();
    std::string txt = "lift obstruction scan\n";
    bool fig_done = false;
    for (const auto& [w, v] : gv.points) {
        json e;
        e["point"] = detail_io::rvec_json(w);
        e["verdict"] = detail_cli::verdict_json(v);
        pts.push_back(e);
        std::ostringstream line;
        line << "  " << std::left << std::setw(24) << to_string(w)
             << detail_cli::verdict_label(v);
        if (!v.reason.empty()) line << "  [" << v.reason << "]";
        txt += line.str() + "\n";
        if (v.has_fans) {
            txt += "      curve star:  " + detail_cli::fan_text(v.curve_star) + "\n";
            txt += "      stable fan:  " + detail_cli::fan_text(v.stable_fan) + "\n";
        }
        if (opt.verify && v.has_fans && v.plane) {
            ValuedSupport fw = initial_form_support(*p.surface, w);
            if (hull3(fw.exponents()).dim == 3) {
                WeightedFan1 fan2 = stable_intersection_perturbed(fw, *v.plane, opt.seed);
                if (!(fan2 == v.stable_fan))
                    throw std::logic_error("verify: perturbation route disagrees at " + to_string(w));
            }
        }
        if (!opt.emit_fig.empty() && v.has_fans && !fig_done) {
            detail_cli::emit_fig_file(opt.emit_fig, v.stable_fan, v.curve_star);
            fig_done = true;
        }
    }
    rep.data["points"] = pts;
    bool obstructed = gv.overall == VerdictKind::Obstructed;
    rep.data["overall"] = obstructed ? "Obstructed" : "NoObstructionFound";
    if (opt.verify) rep.data["verified"] = true;
    txt += obstructed ? "overall: OBSTRUCTED (the curve does not lift in any such surface)\n"
                      : "overall: no obstruction found (the test is a necessary condition only)\n";
    rep.text = txt;
    rep.exit_code = obstructed ? 2 : 0;
    return rep;
}

inline Report run_check_line(const ProblemFile& p, const RunOptions& opt) {
    if (!p.surface) throw ProblemError("check-line: missing \"surface\"");
    if (!p.line) throw ProblemError("check-line: missing \"line\"");
    Verdict v = classical_line_lift_check(*p.surface, p.line->direction, p.line->weight,
                                          p.line->base);
    Report rep;
    rep.data["task"] = "check-line";
    rep.data["verdict"] = detail_cli::verdict_json(v);
    std::string txt = "classical line check, direction " + to_string(p.line->direction) +
                      ", weight " + to_string(p.line->weight) + "\n  " +
                      detail_cli::verdict_label(v);
    if (!v.reason.empty()) txt += "  [" + v.reason + "]";
    rep.text = txt + "\n";
    rep.exit_code = v.kind == VerdictKind::Obstructed ? 2 : 0;
    return rep;
}

inline Report run_factor_obstruct(const ProblemFile& p, const RunOptions& opt) {
    if (!p.surface) throw ProblemError("factor-obstruct: missing \"surface\"");
    IrreducibilityClass c = support_irreducibility(p.surface->exponents(), p.surface->dim);
    Report rep;
    rep.data["task"] = "factor-obstruct";
    rep.data["class"] = to_string(c.kind);
    rep.data["rule"] = to_string(c.rule);
    if (opt.verify && p.surface->dim == 2) {
        // Cross-check the hull shape against the brute-force oracle.
        if (!(oracle::brute_hull2(p.surface->exponents()) == hull2(p.surface->exponents())))
            throw std::logic_error("verify: hull oracle disagrees");
        rep.data["verified"] = true;
    }
    rep.text = std::string("support factorization class: ") + to_string(c.kind) + "  (" +
               to_string(c.rule) + ")\n";
    return rep;
}

inline ProblemFile make_vigeland_problem(const Int& delta, const Rat& a) {
    VigelandInstance inst = vigeland_instance(delta, a);
    ProblemFile p;
    p.surface = inst.surface;
    p.curve = inst.curve;
    p.task = "check-lift";
    return p;
}

/// Dispatch by task name, as the CLI does.
inline Report run_task(const std::string& task, const ProblemFile& p, const RunOptions& opt) {
    if (task == "hypersurface") return run_hypersurface(p, opt);
    if (task == "stable-int") return run_stable_int(p, opt);
    if (task == "check-lift") return run_check_lift(p, opt);
    if (task == "check-line") return run_check_line(p, opt);
    if (task == "factor-obstruct") return run_factor_obstruct(p, opt);
    throw ProblemError("unknown task: " + task);
}

}  // namespace troplift
