#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicpm/suites.hpp"
#include "cubicpm/version.hpp"

namespace cubicpm::cli {

using nlohmann::json;

namespace detail {

inline std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream os;
        os << stdin_stream.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    require(in.good(), ErrorKind::BadParams, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

struct Report {
    json body;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    Report(const std::string& command, const std::string& input) {
        body["schema"] = kReportSchema;
        body["version"] = kVersion;
        body["command"] = command;
        body["input_digest"] = fnv1a_digest(input);
    }

    void emit(std::ostream& out) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        body["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        out << body.dump(2) << "\n";
    }
};

inline json rational_json(const Rational& r) { return to_fraction_string(r); }

inline json constant_json(const ConstantValue& v, bool decimal) {
    json out;
    out["value"] = format_constant(v);
    if (decimal) {
        auto [lo, hi] = cv_enclosure(v);
        out["decimal"] = {to_decimal_string(lo), to_decimal_string(hi)};
    }
    return out;
}

inline json cut_json(const EdgeCut& c) {
    return json{{"edges", c.cut_edges}, {"side", c.side}, {"size", c.size},
                {"odd", c.odd},         {"cyclic", c.cyclic}};
}

inline json matching_json(const EdgeSet& m) { return m.ids(); }

inline json distribution_json(const BalancedDistribution& d) {
    json support = json::array();
    for (const auto& [m, w] : d.support)
        support.push_back({{"matching", matching_json(m.edge_set)}, {"weight", rational_json(w)}});
    return json{{"target", rational_json(d.target_prob)}, {"support", support}};
}

inline json burl_json(const Multigraph& g, const Burl& b, bool decimal) {
    ConstantValue beta1 = cv_times_x(Rational(154, 314));
    ConstantValue beta2 = cv_times_x(Rational(74, 314));
    json out;
    out["vertices"] = b.vertices;
    out["kind"] = to_string(b.kind);
    out["certificate"] = b.certificate;
    out["weight"] = constant_json(b.kind != TwigKind::None ? beta1 : beta2, decimal);
    return out;
}

}  // namespace detail

// Subcommand dispatch; returns the process exit code (0 ok, 1 verification or
// size-limit failure, 2 usage error).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
    CLI::App app{"exact verification toolkit for perfect matchings in cubic bridgeless graphs"};
    app.require_subcommand(1);
    bool decimal = false;
    app.add_flag("--decimal", decimal, "attach decimal enclosures to exact values");

    std::string file, set_csv, path_csv, target = "1/3", suite, name, sigma, base = "k4";
    long long copt = 0;
    int kopt = 4, length = 3, vertex = 0;

    auto* count = app.add_subcommand("count", "m(G), per-edge counts and m*(G)");
    count->add_option("file", file, "graph file or - for stdin")->required();

    auto* cuts = app.add_subcommand("cuts", "connectivity report");
    cuts->add_option("file", file)->required();

    auto* burl = app.add_subcommand("burl", "LP burl certificate for a vertex set");
    burl->add_option("file", file)->required();
    burl->add_option("--set", set_csv, "comma-separated vertex ids")->required();

    auto* balanced = app.add_subcommand("balanced", "balanced distribution on M(G,V)");
    balanced->add_option("file", file)->required();
    balanced->add_option("--target", target, "edge probability, default 1/3");
    balanced->add_option("--set", set_csv, "restrict to M(G,X) for this vertex set");

    auto* decompose = app.add_subcommand("decompose", "maximized small-cut-decomposition");
    decompose->add_option("file", file)->required();

    auto* prune_cmd = app.add_subcommand("prune", "contract irrelevant triangles");
    prune_cmd->add_option("file", file)->required();

    auto* core = app.add_subcommand("core", "search for a cyclically 4-edge-connected core");
    core->add_option("file", file)->required();

    auto* split = app.add_subcommand("split", "split along a 4-vertex path");
    split->add_option("file", file)->required();
    split->add_option("--path", path_csv, "v1,v2,v3,v4")->required();

    auto* verdict = app.add_subcommand("verdict", "S1/S2 verdict with the flipping construction");
    verdict->add_option("file", file)->required();

    auto* constants = app.add_subcommand("constants", "constant system and inequalities");
    constants->add_option("--c", copt, "override c (default: minimal)");

    auto* klee = app.add_subcommand("klee", "constructive foliage for a tail set");
    klee->add_option("file", file)->required();
    klee->add_option("--set", set_csv, "comma-separated vertex ids of Z")->required();

    auto* kregular = app.add_subcommand("kregular", "k-regular reduction to a cubic core");
    kregular->add_option("file", file)->required();
    kregular->add_option("--k", kopt, "regularity")->required();

    auto* generate = app.add_subcommand("generate", "emit a catalog graph in text format");
    generate->add_option("name", name,
                         "k4|b3|k33|petersen|prism|double_triangle|necklace|k4_chain|triangle_replace")
        ->required();
    generate->add_option("--length", length, "blocks (necklace) or positions (k4_chain)");
    generate->add_option("--sigma", sigma, "k4_chain rails, e.g. 12,13,23");
    generate->add_option("--base", base, "catalog name for triangle_replace");
    generate->add_option("--vertex", vertex, "vertex to expand for triangle_replace");

    auto* verify = app.add_subcommand("verify-lemmas", "run the verification suites");
    verify->add_option("--suite", suite, "single suite name (default: all)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    auto load_cubic = [&](const std::string& text) { return cubic_from_text(text); };
    auto make_catalog = [&](const std::string& which) -> CubicMultigraph {
        if (which == "k4") return make_k4();
        if (which == "b3") return make_b3();
        if (which == "k33") return make_k33();
        if (which == "petersen") return make_petersen();
        if (which == "prism") return make_prism();
        if (which == "double_triangle") return make_double_triangle();
        if (which == "necklace") return make_necklace(length);
        if (which == "k4_chain") {
            if (sigma.empty()) return make_k4_chain(length);
            std::vector<RailPair> rails;
            for (int pair : detail::parse_int_list(sigma))
                rails.emplace_back(pair / 10, pair % 10);
            return make_k4_chain(rails);
        }
        fail(ErrorKind::BadParams, "unknown catalog name '" + which + "'");
    };

    try {
        if (*count) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("count", text);
            auto counts = matching_counts(load_cubic(text));
            rep.body["results"] = {{"m", counts.total},
                                   {"m_star", counts.m_star},
                                   {"per_edge", counts.per_edge}};
            rep.emit(out);
        } else if (*cuts) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("cuts", text);
            auto r = connectivity_report(load_cubic(text));
            json bridges = json::array(), twos = json::array(), threes = json::array();
            for (const auto& c : r.bridges) bridges.push_back(detail::cut_json(c));
            for (const auto& c : r.two_edge_cuts) twos.push_back(detail::cut_json(c));
            for (const auto& c : r.cyclic_three_cuts) threes.push_back(detail::cut_json(c));
            rep.body["results"] = {{"bridgeless", r.bridgeless},
                                   {"bridges", bridges},
                                   {"two_edge_cuts", twos},
                                   {"cyclic_three_cuts", threes},
                                   {"cyclically_4_edge_connected", r.cyclically_4_edge_connected}};
            rep.emit(out);
        } else if (*burl) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("burl", text);
            auto g = load_cubic(text);
            auto cert = burl_certificate(g, detail::parse_int_list(set_csv));
            json res;
            res["min_expected"] = detail::rational_json(cert.min_expected);
            if (decimal) res["min_expected_decimal"] = to_decimal_string(Rational(cert.min_expected));
            res["is_burl"] = cert.is_burl;
            res["alternating"] = cert.alternating;
            res["witness"] = detail::distribution_json(cert.witness);
            rep.body["results"] = res;
            rep.emit(out);
        } else if (*balanced) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("balanced", text);
            auto g = load_cubic(text);
            std::vector<int> xs;
            if (set_csv.empty())
                for (int v = 0; v < g.vertex_count(); ++v) xs.push_back(v);
            else
                xs = detail::parse_int_list(set_csv);
            auto d = balanced_distribution(g, xs, rational_from_string(target));
            rep.body["results"] = detail::distribution_json(d);
            rep.emit(out);
        } else if (*decompose) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("decompose", text);
            auto g = load_cubic(text);
            std::vector<std::vector<int>> ys;
            if (is_pruned(g))
                for (const auto& t : elementary_twigs(g))
                    if (static_cast<int>(t.vertices.size()) < g.vertex_count())
                        ys.push_back(t.vertices);
            auto d = maximize_decomposition(g, refine_decomposition(g, ys), ys);
            json tree_edges = json::array(), preimages = json::array(), cut_sizes = json::array();
            for (auto [a, b] : d.tree_edges) tree_edges.push_back({a, b});
            for (int t = 0; t < d.tree_size; ++t) preimages.push_back(d.preimage(t));
            for (int f = 0; f < static_cast<int>(d.tree_edges.size()); ++f)
                cut_sizes.push_back(cut_of_tree_edge(g, d, f).size);
            rep.body["results"] = {{"tree_size", d.tree_size},
                                   {"tree_edges", tree_edges},
                                   {"preimages", preimages},
                                   {"cut_sizes", cut_sizes}};
            rep.emit(out);
        } else if (*prune_cmd) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("prune", text);
            auto res = prune(load_cubic(text));
            json triangles = json::array();
            for (const auto& t : res.contracted) triangles.push_back({t[0], t[1], t[2]});
            rep.body["results"] = {{"contractions", res.contractions},
                                   {"triangles", triangles},
                                   {"graph", to_text(res.graph)}};
            rep.emit(out);
        } else if (*core) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("core", text);
            auto res = has_core(load_cubic(text));
            json witness = json::array();
            for (const auto& step : res.witness)
                witness.push_back({{"cut_edges", step.cut_edges}, {"kept_side", step.kept_side}});
            rep.body["results"] = {{"has_core", res.has_core}, {"witness", witness}};
            rep.emit(out);
        } else if (*split) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("split", text);
            auto g = load_cubic(text);
            auto p = detail::parse_int_list(path_csv);
            require(p.size() == 4, ErrorKind::BadParams, "--path needs four vertices");
            auto rec = split_path(g, p[0], p[1], p[2], p[3]);
            rep.body["results"] = {{"path", p},
                                   {"v1_prime", rec.v1_prime},
                                   {"v4_prime", rec.v4_prime},
                                   {"graph", to_text(rec.result)},
                                   {"new_edge_v1v4", rec.edge_v1v4},
                                   {"new_edge_v1pv4p", rec.edge_v1pv4p}};
            rep.emit(out);
        } else if (*verdict) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("verdict", text);
            auto v = main2_verdict(load_cubic(text));
            rep.body["results"] = {{"n", v.n},
                                   {"c", v.c},
                                   {"m", v.m_total},
                                   {"m_star", v.m_star},
                                   {"max_components", v.max_components},
                                   {"s1", v.s1},
                                   {"s2", v.s2},
                                   {"flipped_distinct", v.flipped_distinct},
                                   {"flipping_verified", v.flipping_verified}};
            rep.emit(out);
        } else if (*constants) {
            detail::Report rep("constants", "c=" + std::to_string(copt));
            auto sys = constant_system(copt > 0 ? copt : minimal_ceps());
            json ineqs = json::array();
            for (const auto& i : sys.inequality_report)
                ineqs.push_back({{"index", i.index}, {"holds", i.holds}, {"tight", i.tight},
                                 {"text", i.text}});
            rep.body["results"] = {{"c", sys.c},
                                   {"alpha", detail::constant_json(sys.alpha, decimal)},
                                   {"beta1", detail::constant_json(sys.beta1, decimal)},
                                   {"beta2", detail::constant_json(sys.beta2, decimal)},
                                   {"gamma", detail::constant_json(sys.gamma, decimal)},
                                   {"inequalities", ineqs},
                                   {"tight_set", sys.tight_set}};
            rep.emit(out);
            bool all_hold = true;
            for (const auto& i : sys.inequality_report) all_hold = all_hold && i.holds;
            return all_hold ? 0 : 1;
        } else if (*klee) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("klee", text);
            auto g = load_cubic(text);
            auto zs = detail::parse_int_list(set_csv);
            auto f = klee_foliage(g, zs);
            json burls = json::array();
            for (const auto& b : f.burls) burls.push_back(detail::burl_json(g, b, decimal));
            ConstantValue weight = foliage_weight(f);
            ConstantValue bound = cv_times_x(Rational(1, 314)).scaled(static_cast<int>(zs.size())) +
                                  cv_times_x(Rational(74, 314));
            rep.body["results"] = {{"burls", burls},
                                   {"weight", detail::constant_json(weight, decimal)},
                                   {"bound", detail::constant_json(bound, decimal)},
                                   {"bound_holds", compare(weight, bound) >= 0}};
            rep.emit(out);
        } else if (*kregular) {
            std::string text = detail::read_input(file, in);
            detail::Report rep("kregular", text);
            std::istringstream is(text);
            auto g = read_multigraph(is);
            auto r = kregular_construct(g, kopt);
            rep.body["results"] = {{"k", r.k},
                                   {"n", r.n},
                                   {"pm_count", r.pm_count},
                                   {"m1", detail::matching_json(r.m1)},
                                   {"m2", detail::matching_json(r.m2)},
                                   {"m3", detail::matching_json(r.m3)},
                                   {"m1_m2_overlap", r.m1_m2_overlap},
                                   {"degree3_count", r.degree3_count},
                                   {"degree3_bound", detail::rational_json(r.degree3_bound)},
                                   {"reduced", to_text(r.reduced)},
                                   {"reduced_n", r.reduced.vertex_count()},
                                   {"dropped_cycles", r.dropped_cycle_components},
                                   {"c", r.c},
                                   {"bound_chain_consistent", r.bound_chain_consistent}};
            rep.emit(out);
            return r.bound_chain_consistent ? 0 : 1;
        } else if (*generate) {
            auto g = name == "triangle_replace" ? triangle_replace(make_catalog(base), vertex)
                                                : make_catalog(name);
            out << "# " << name << "\n";
            write_multigraph(out, g);
        } else if (*verify) {
            detail::Report rep("verify-lemmas", suite.empty() ? "all" : suite);
            json results = json::array();
            bool all_passed = true;
            auto names = suite.empty() ? suites::suite_names() : std::vector<std::string>{suite};
            for (const auto& sn : names) {
                SuiteResult r = suites::run_suite(sn);
                json failures = json::array();
                for (const auto& f : r.failures) failures.push_back(f);
                results.push_back({{"name", r.name},
                                   {"description", r.description},
                                   {"checks", r.checks},
                                   {"failures", failures},
                                   {"passed", r.passed()}});
                all_passed = all_passed && r.passed();
            }
            rep.body["results"] = {{"suites", results}};
            rep.emit(out);
            return all_passed ? 0 : 1;
        }
        return 0;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cubicpm::cli
