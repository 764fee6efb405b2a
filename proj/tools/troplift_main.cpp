// Command line front end. Subcommands: hypersurface, stable-int,
// check-lift, check-line, factor-obstruct, vigeland. Problem files are
// JSON (see README); "-" reads from stdin. Exit codes: 0 computed / no
// obstruction, 2 obstruction found, 1 usage or input error.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "troplift/troplift.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw troplift::ProblemError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lifting obstructions for tropical curves in surfaces in 3-space"};
    app.require_subcommand(1);

    troplift::RunOptions opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for perturbation draws");
    app.add_flag("--verify", opt.verify, "re-derive results through the oracle routes");
    app.add_option("--emit-fig", opt.emit_fig, "write fan/star polylines (JSON) to this path");

    std::string file = "-";
    std::vector<std::string> tasks = {"hypersurface", "stable-int", "check-lift", "check-line",
                                      "factor-obstruct"};
    std::map<std::string, CLI::App*> subs;
    for (const auto& t : tasks) {
        CLI::App* sub = app.add_subcommand(t);
        sub->add_option("file", file, "problem file (JSON), - for stdin");
    }

    CLI::App* vig = app.add_subcommand("vigeland", "emit a Vigeland instance as a problem file");
    long long delta = 3;
    std::string a_str = "1";
    vig->add_option("--delta", delta, "degree, at least 3")->required();
    vig->add_option("--a", a_str, "bounded edge length, positive rational p/q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (vig->parsed()) {
            auto a = troplift::parse_rat(a_str);
            if (!a) throw troplift::ProblemError("--a: not a rational: " + a_str);
            troplift::ProblemFile p = troplift::make_vigeland_problem(troplift::Int(delta), *a);
            std::cout << troplift::problem_json(p).dump(2) << "\n";
            return 0;
        }
        for (const auto& t : tasks) {
            CLI::App* sub = app.get_subcommand(t);
            if (!sub->parsed()) continue;
            troplift::ProblemFile p = troplift::parse_problem(read_input(file));
            troplift::Report rep = troplift::run_task(t, p, opt);
            std::cout << rep.rendered(opt);
            return rep.exit_code;
        }
    } catch (const troplift::ProblemError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
