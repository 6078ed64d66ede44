#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clique_oracle.hpp"
#include "co_cycles.hpp"
#include "io.hpp"
#include "parity_audit.hpp"
#include "solver.hpp"
#include "svg.hpp"
#include "triangles.hpp"

namespace diskclique {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;       // verify-rep: representation disagrees with the graph
inline constexpr int capped = 2;         // solve: enumeration cap hit, partial answer
inline constexpr int verification = 3;   // a construct-then-verify step failed
inline constexpr int parse = 64;         // malformed input or command line
inline constexpr int precondition = 65;  // input violates an operation's precondition
inline constexpr int no_input = 66;      // file could not be read or written
}  // namespace exit_code

namespace detail {

inline std::vector<int> parse_length_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        auto q = parse_rational(item);
        if (!q || q->get_den() != 1 || !q->get_num().fits_sint_p())
            throw ParseError(std::string("bad ") + what + " length '" + item + "'");
        out.push_back(static_cast<int>(q->get_num().get_si()));
    }
    return out;
}

inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-")
        out << content;
    else
        write_file(path, content);
}

struct SolveArgs {
    std::string instance;
    std::string mode = "exact";
    std::string eps = "1/10";
    std::uint64_t cap = std::uint64_t{1} << 22;
    std::string report;
    int threads = 1;
    int fixed_threshold = 0;
    std::size_t trace_limit = 10000;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out) {
    Instance inst = parse_instance(read_file(a.instance));
    SolveConfig cfg;
    if (a.mode == "exact")
        cfg.mode = SolveMode::Exact;
    else if (a.mode == "approx")
        cfg.mode = SolveMode::Approx;
    else if (a.mode == "qptas")
        cfg.mode = SolveMode::Qptas;
    else
        throw ParseError("unknown mode '" + a.mode + "'");
    auto eps = parse_rational(a.eps);
    if (!eps) throw ParseError("bad --eps '" + a.eps + "'");
    cfg.epsilon = *eps;
    cfg.enumeration_cap = a.cap;
    cfg.threads = a.threads;
    cfg.trace_limit = a.trace_limit;
    if (a.fixed_threshold > 0) cfg.policy = ThresholdPolicy::constant(a.fixed_threshold);

    SolveReport r = solve_max_clique(inst.graph, cfg);
    std::string json = report_json(r, inst.graph).dump(2) + "\n";
    if (a.report.empty()) {
        out << json;
    } else {
        write_file(a.report, json);
        out << "value " << r.value.get_str() << "\noptimal " << (r.optimal ? "true" : "false") << "\n";
    }
    return r.capped ? exit_code::capped : exit_code::ok;
}

inline int cmd_oracle(const std::string& path, int limit, std::ostream& out) {
    Instance inst = parse_instance(read_file(path));
    auto r = brute_force_max_clique(inst.graph, limit);
    out << "value " << r.value.get_str() << "\nclique";
    for (Vertex v : r.vertices) out << ' ' << v;
    out << "\n";
    return exit_code::ok;
}

struct BuildArgs {
    std::string even;
    std::string odd;
    std::string eps_ratio = "1/1000";
    std::string svg;
    std::string out;
    std::string graph_out;
    int retries = 6;
};

inline int cmd_build(const BuildArgs& a, std::ostream& out) {
    auto lengths = parse_length_list(a.even, "even");
    for (int len : lengths)
        if (len % 2 != 0) throw PreconditionError("--even got odd length " + std::to_string(len));
    auto odd = parse_length_list(a.odd, "odd");
    for (int len : odd)
        if (len % 2 == 0) throw PreconditionError("--odd got even length " + std::to_string(len));
    lengths.insert(lengths.end(), odd.begin(), odd.end());
    BuildPlan plan = BuildPlan::from_lengths(lengths);
    auto eps = parse_rational(a.eps_ratio);
    if (!eps) throw ParseError("bad --eps-ratio '" + a.eps_ratio + "'");
    plan.epsilon_ratio = *eps;
    plan.retry_budget = a.retries;

    Representation rep = build_co_cycles_representation(plan);
    emit(a.out, emit_disks(rep), out);
    if (!a.graph_out.empty()) write_file(a.graph_out, emit_graph(co_cycles_target(plan)));
    if (!a.svg.empty()) write_file(a.svg, render_disks_svg(rep));
    return exit_code::ok;
}

inline int cmd_audit(const std::string& path, std::ostream& out) {
    auto [c1, c2] = parse_cycle_pair(read_file(path));
    K22Violation v = audit_two_odd_cycles(c1, c2);
    auto dump = [&](const char* name, const std::vector<SegmentCounts>& counts) {
        for (std::size_t i = 0; i < counts.size(); ++i)
            out << name << ' ' << i << " a=" << counts[i].line_hits << " b=" << counts[i].crossed_by
                << " c=" << counts[i].intersects << "\n";
    };
    dump("segment1", v.first);
    dump("segment2", v.second);
    out << "sums1 a=" << v.sum_a_first << " b=" << v.sum_b_first << " c=" << v.sum_c_first << "\n";
    out << "sums2 a=" << v.sum_a_second << " b=" << v.sum_b_second << " c=" << v.sum_c_second << "\n";
    out << "ledger " << (v.ledger_consistent() ? "consistent" : "INCONSISTENT") << "\n";
    out << "violations " << v.violations.size() << "\n";
    if (v.violations.empty()) {
        out << "no violated pair found\n";
        return exit_code::verification;
    }
    auto pt = [](const Point& p) { return "(" + p.x.get_str() + "," + p.y.get_str() + ")"; };
    out << "violated S" << v.index_a << " " << pt(v.segment_a[0]) << "-" << pt(v.segment_a[1]) << " S'" << v.index_b << " "
        << pt(v.segment_b[0]) << "-" << pt(v.segment_b[1]) << "\n";
    return v.ledger_consistent() ? exit_code::ok : exit_code::verification;
}

inline int cmd_gen_co2sub(const std::string& path, const std::string& dest, std::ostream& out) {
    Graph g = parse_graph(read_file(path));
    emit(dest, emit_graph(co_two_subdivision(g)), out);
    return exit_code::ok;
}

inline int cmd_gen_triangles(const std::string& path, const std::string& dest, const std::string& svg,
                             const std::string& graph_out, std::ostream& out) {
    Graph g = parse_graph(read_file(path));
    TriangleGadget gadget = build_triangle_gadget(g);
    auto ts = gadget.all();
    emit(dest, emit_triangles(ts), out);
    if (!graph_out.empty()) write_file(graph_out, emit_graph(gadget.target));
    if (!svg.empty()) {
        const int n = g.vertex_count();
        Rational top = gadget.parabola_coefficient * (n + 1) * (n + 1);
        write_file(svg, render_triangles_svg(ts, {{Rational(-2), -top}, {Rational(n + 2), top}}));
    }
    return exit_code::ok;
}

inline int cmd_verify(const std::string& disks, const std::string& graph, std::ostream& out) {
    Representation rep = parse_disks(read_file(disks));
    Graph g = parse_graph(read_file(graph));
    VerifyResult r = verify_representation(rep, g);
    if (r.ok) {
        out << "ok " << rep.size() << " disks match\n";
        return exit_code::ok;
    }
    out << "mismatch " << r.mismatch->describe() << "\n";
    return exit_code::mismatch;
}

}  // namespace detail

/// Runs one command line (args excludes the program name). Never throws.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Maximum clique on disk graphs, representation builder and certificates", "diskclique"};
    app.require_subcommand(1);

    detail::SolveArgs solve;
    auto* s = app.add_subcommand("solve", "maximum (weighted) clique of a graph, disk or triangle instance");
    s->add_option("instance", solve.instance, "instance file")->required();
    s->add_option("--mode", solve.mode, "exact | approx | qptas")->capture_default_str();
    s->add_option("--eps", solve.eps, "epsilon for approximate modes (rational)")->capture_default_str();
    s->add_option("--cap", solve.cap, "maximum subsets enumerated per frontier")->capture_default_str();
    s->add_option("--report", solve.report, "write the JSON report here instead of stdout");
    s->add_option("--threads", solve.threads, "worker threads for the branching")->capture_default_str();
    s->add_option("--threshold", solve.fixed_threshold, "fixed branching degree threshold");
    s->add_option("--trace-limit", solve.trace_limit, "maximum trace events kept")->capture_default_str();

    std::string oracle_path;
    int oracle_limit = kDefaultOracleLimit;
    auto* o = app.add_subcommand("oracle", "brute-force maximum clique (small instances only)");
    o->add_option("instance", oracle_path, "instance file")->required();
    o->add_option("--limit", oracle_limit, "refuse instances with more vertices (at most 64)")->capture_default_str();

    detail::BuildArgs build;
    auto* b = app.add_subcommand("build-rep", "disk representation of the complement of disjoint cycles");
    b->add_option("--even", build.even, "comma-separated even cycle lengths");
    b->add_option("--odd", build.odd, "odd cycle length (at most one)");
    b->add_option("--eps-ratio", build.eps_ratio, "anchor gap over radius")->capture_default_str();
    b->add_option("--retries", build.retries, "construction attempts")->capture_default_str();
    b->add_option("--out", build.out, "disk file (default stdout)");
    b->add_option("--graph-out", build.graph_out, "also write the target graph");
    b->add_option("--svg", build.svg, "also write an SVG drawing");

    std::string audit_path;
    auto* a = app.add_subcommand("audit-odd-cycles", "parity ledger and violated K_{2,2} pair of two odd polygons");
    a->add_option("cycles", audit_path, "file with two 'cycle x0 y0 x1 y1 ...' lines")->required();

    std::string co2_path, co2_out;
    auto* c = app.add_subcommand("gen-co2sub", "co-2-subdivision of a graph");
    c->add_option("graph", co2_path, "graph file")->required();
    c->add_option("--out", co2_out, "output file (default stdout)");

    std::string tri_path, tri_out, tri_svg, tri_graph;
    auto* t = app.add_subcommand("gen-triangles", "verified filled-triangle realization of a co-2-subdivision");
    t->add_option("graph", tri_path, "graph file")->required();
    t->add_option("--out", tri_out, "triangle file (default stdout)");
    t->add_option("--svg", tri_svg, "also write an SVG drawing");
    t->add_option("--graph-out", tri_graph, "also write the co-2-subdivision");

    std::string verify_disks, verify_graph;
    auto* v = app.add_subcommand("verify-rep", "check that disks realize a graph exactly");
    v->add_option("disks", verify_disks, "disk file")->required();
    v->add_option("graph", verify_graph, "graph file")->required();

    std::vector<std::string> argv_storage{"diskclique"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s2 : argv_storage) argv.push_back(s2.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_code::parse;
    }

    try {
        if (s->parsed()) return detail::cmd_solve(solve, out);
        if (o->parsed()) return detail::cmd_oracle(oracle_path, oracle_limit, out);
        if (b->parsed()) return detail::cmd_build(build, out);
        if (a->parsed()) return detail::cmd_audit(audit_path, out);
        if (c->parsed()) return detail::cmd_gen_co2sub(co2_path, co2_out, out);
        if (t->parsed()) return detail::cmd_gen_triangles(tri_path, tri_out, tri_svg, tri_graph, out);
        if (v->parsed()) return detail::cmd_verify(verify_disks, verify_graph, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_code::precondition;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_code::verification;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::no_input;
    }
    return exit_code::parse;
}

}  // namespace diskclique
