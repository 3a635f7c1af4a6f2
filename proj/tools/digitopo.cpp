// digitopo: command-line front end for the digital topology checkers.
//
// Exit codes: 0 the checked property holds, 1 it fails (a witness is
// printed), 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "digitopo/adjacency.hpp"
#include "digitopo/alexandrov.hpp"
#include "digitopo/io.hpp"
#include "digitopo/manifold.hpp"

namespace {

using digitopo::io::Json;
using Clock = std::chrono::steady_clock;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Options {
    bool timing = true;
    int dim = 0;
    std::string adjacency;
    std::string alpha;
    std::string beta;
    std::string point;
    std::string input;
    std::string output;
    std::string window;
    std::string topology = "khalimsky";
    bool complement = false;
    bool allow_slow = false;
};

class Reporter {
public:
    explicit Reporter(const Options& opt) : opt_(opt), start_(Clock::now()) {}

    int emit(Json report, int code) const {
        if (opt_.timing) {
            const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_).count();
            report["timing"] = Json{{"elapsed_ms", static_cast<double>(us) / 1000.0}};
        }
        std::cout << report.dump() << '\n';
        return code;
    }

private:
    const Options& opt_;
    Clock::time_point start_;
};

// Display name of a cubical adjacency by its neighbor count, e.g. 8 for cubical:0 in Z^2.
std::string alias(int n, int k) {
    return std::to_string(digitopo::neighbor_count(digitopo::AdjacencySpec::cubical(n, k)));
}

int cmd_neighbors(const Options& opt) {
    const auto a = digitopo::AdjacencySpec::parse(opt.adjacency, opt.dim);
    const auto p = digitopo::io::parse_point(opt.point, opt.dim);
    std::cout << digitopo::io::to_document(digitopo::neighbors(a, p)).dump() << '\n';
    return kHolds;
}

int cmd_components(const Options& opt) {
    const Reporter rep(opt);
    const auto m = digitopo::io::load_document(opt.input);
    const auto a = digitopo::AdjacencySpec::parse(opt.adjacency, m.dim());
    const auto part = opt.complement ? digitopo::complement_components(a, m) : digitopo::components(a, m);
    Json report{{"command", opt.complement ? "components --complement" : "components"},
                {"adjacency", a.str()},
                {"partition", digitopo::io::to_json(part)}};
    return rep.emit(std::move(report), kHolds);
}

int cmd_check_manifold(const Options& opt) {
    const Reporter rep(opt);
    const auto m = digitopo::io::load_document(opt.input);
    const digitopo::AdjacencyPair pair(digitopo::AdjacencySpec::parse(opt.alpha, m.dim()),
                                       digitopo::AdjacencySpec::parse(opt.beta, m.dim()));
    const auto v = digitopo::is_digital_manifold(m, pair);
    Json report{{"command", "check-manifold"},
                {"alpha", pair.alpha.str()},
                {"beta", pair.beta.str()},
                {"verdict", digitopo::io::to_json(v)}};
    return rep.emit(std::move(report), v.holds ? kHolds : kFails);
}

int cmd_good_pair(const Options& opt) {
    const Reporter rep(opt);
    const digitopo::AdjacencyPair pair(digitopo::AdjacencySpec::parse(opt.alpha, opt.dim),
                                       digitopo::AdjacencySpec::parse(opt.beta, opt.dim));
    const auto v = digitopo::is_good_pair(pair);
    Json report{{"command", "good-pair"},
                {"dim", opt.dim},
                {"alpha", pair.alpha.str()},
                {"beta", pair.beta.str()},
                {"verdict", digitopo::io::to_json(v, pair)}};
    return rep.emit(std::move(report), v.holds ? kHolds : kFails);
}

int cmd_good_pair_table(const Options& opt) {
    const Reporter rep(opt);
    const int n = opt.dim;
    const auto table = digitopo::good_pair_table(n, opt.allow_slow);
    Json cells = Json::array();
    Json grid = Json::array();
    std::string row;
    int good = 0;
    for (const auto& e : table) {
        const digitopo::AdjacencyPair pair(digitopo::AdjacencySpec::cubical(n, e.l),
                                           digitopo::AdjacencySpec::cubical(n, e.k));
        cells.push_back(Json{{"l", e.l},
                             {"k", e.k},
                             {"alias", "(" + alias(n, e.l) + "," + alias(n, e.k) + ")"},
                             {"good", e.verdict.holds},
                             {"verdict", digitopo::io::to_json(e.verdict, pair)}});
        good += e.verdict.holds ? 1 : 0;
        row += e.verdict.holds ? '+' : '.';
        if (e.k == n - 1) {
            grid.push_back(row);
            row.clear();
        }
    }
    Json report{{"command", "good-pair-table"},
                {"dim", n},
                {"good_count", good},
                {"grid", std::move(grid)},
                {"cells", std::move(cells)}};
    return rep.emit(std::move(report), kHolds);
}

int cmd_surface_check(const Options& opt) {
    if (opt.topology != "khalimsky") throw digitopo::Error("unsupported topology '" + opt.topology + "'");
    const Reporter rep(opt);
    const auto p = digitopo::io::parse_point(opt.point, opt.dim);
    const auto around = digitopo::neighbors(digitopo::AdjacencySpec::khalimsky(opt.dim), p);
    const auto space = digitopo::khalimsky_space_on(around);
    const bool ok = space.is_k_surface(opt.dim - 1);
    Json report{{"command", "surface-check"},
                {"dim", opt.dim},
                {"point", digitopo::io::to_json(p)},
                {"topology", opt.topology},
                {"surface_dim", opt.dim - 1},
                {"set", digitopo::io::to_document(around)},
                {"verdict", Json{{"holds", ok}}}};
    return rep.emit(std::move(report), ok ? kHolds : kFails);
}

int cmd_jordan(const Options& opt) {
    const Reporter rep(opt);
    const auto m = digitopo::io::load_document(opt.input);
    const digitopo::AdjacencyPair pair(digitopo::AdjacencySpec::parse(opt.alpha, m.dim()),
                                       digitopo::AdjacencySpec::parse(opt.beta, m.dim()));
    const auto r = digitopo::jordan_check(m, pair);
    Json report{{"command", "jordan"},
                {"alpha", pair.alpha.str()},
                {"beta", pair.beta.str()},
                {"verdict", Json{{"holds", r.separates_in_two()}}},
                {"report", digitopo::io::to_json(r)}};
    return rep.emit(std::move(report), r.separates_in_two() ? kHolds : kFails);
}

// Accepts "lo,hi" (square window) or "x0,y0,x1,y1".
digitopo::Window parse_window(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            v.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw digitopo::Error("malformed window '" + text + "'");
    }
    if (v.size() == 2) return {digitopo::Point{v[0], v[0]}, digitopo::Point{v[1], v[1]}};
    if (v.size() == 4) return {digitopo::Point{v[0], v[1]}, digitopo::Point{v[2], v[3]}};
    throw digitopo::Error("window must be 'lo,hi' or 'x0,y0,x1,y1'");
}

int cmd_render(const Options& opt) {
    const auto m = digitopo::io::load_document(opt.input);
    if (m.dim() != 2) throw digitopo::Error("render requires a 2-dimensional document");
    const digitopo::Window w = !opt.window.empty() ? parse_window(opt.window)
                               : m.empty()         ? digitopo::Window::around(digitopo::Point{0, 0}, 1)
                                                   : digitopo::Window::bounding_box(m).dilated(1);
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw digitopo::Error("cannot write '" + opt.output + "'");
    out << digitopo::io::render_pgm(m, w);
    if (!out) throw digitopo::Error("failed writing '" + opt.output + "'");
    return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digital topology checkers on Z^n"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("!--no-timing", opt.timing, "Omit the timing field from reports");

    const std::string spec_help = "proto | omega | cubical:<k> | khalimsky";
    auto dim_range = CLI::Range(1, digitopo::kMaxDim);

    auto* neighbors = app.add_subcommand("neighbors", "List the neighbors of a point");
    neighbors->add_option("--dim", opt.dim)->required()->check(dim_range);
    neighbors->add_option("--adjacency", opt.adjacency, spec_help)->required();
    neighbors->add_option("--point", opt.point, "Comma-separated coordinates")->required();

    auto* comps = app.add_subcommand("components", "Connected components of a point set or its complement");
    comps->add_option("input", opt.input, "Point-set document")->required();
    comps->add_option("--adjacency", opt.adjacency, spec_help)->required();
    comps->add_flag("--complement", opt.complement, "Partition the complement instead");

    auto* manifold = app.add_subcommand("check-manifold", "Check the digital manifold axioms");
    manifold->add_option("input", opt.input, "Point-set document")->required();
    manifold->add_option("--alpha", opt.alpha, "Foreground adjacency")->required();
    manifold->add_option("--beta", opt.beta, "Background adjacency")->required();

    auto* good = app.add_subcommand("good-pair", "Decide whether an adjacency pair is good");
    good->add_option("--dim", opt.dim)->required()->check(dim_range);
    good->add_option("--alpha", opt.alpha, "Foreground adjacency")->required();
    good->add_option("--beta", opt.beta, "Background adjacency")->required();

    auto* table = app.add_subcommand("good-pair-table", "Good-pair verdicts for all cubical pairs");
    table->add_option("--dim", opt.dim)->required();
    table->add_flag("--allow-slow", opt.allow_slow, "Permit dimension 5");

    auto* surface = app.add_subcommand("surface-check", "Check that the Khalimsky adjacency of a point is a surface");
    surface->add_option("--dim", opt.dim)->required()->check(CLI::Range(2, 4));
    surface->add_option("--point", opt.point, "Comma-separated coordinates")->required();
    surface->add_option("--topology", opt.topology, "Only 'khalimsky' is supported");

    auto* jordan = app.add_subcommand("jordan", "Count complement components of a curve");
    jordan->add_option("input", opt.input, "Point-set document")->required();
    jordan->add_option("--alpha", opt.alpha, "Foreground adjacency")->required();
    jordan->add_option("--beta", opt.beta, "Background adjacency")->required();

    auto* render = app.add_subcommand("render", "Write a 2-D point set as a binary PGM");
    render->add_option("input", opt.input, "Point-set document")->required();
    render->add_option("output", opt.output, "Output .pgm path")->required();
    render->add_option("--window", opt.window, "lo,hi or x0,y0,x1,y1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kHolds : kUsage;
    }

    try {
        if (*neighbors) return cmd_neighbors(opt);
        if (*comps) return cmd_components(opt);
        if (*manifold) return cmd_check_manifold(opt);
        if (*good) return cmd_good_pair(opt);
        if (*table) return cmd_good_pair_table(opt);
        if (*surface) return cmd_surface_check(opt);
        if (*jordan) return cmd_jordan(opt);
        if (*render) return cmd_render(opt);
    } catch (const digitopo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
