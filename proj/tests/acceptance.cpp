// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diskclique/cli.hpp"
#include "support.hpp"

using namespace diskclique;
using namespace testsupport;

namespace {

// Tolerances. Every criterion is exact: a single disagreement fails it.
constexpr long kMaxFailures = 0;
constexpr int kMinOracleInstances = 1000;
constexpr int kAuditTrialsPerPair = 100;
constexpr int kGadgetSamples = 200;
constexpr int kNormalizerSamples = 200;
constexpr int kMaxOracleVertices = 18;
constexpr int kBuilderTotalForOracle = 16;
constexpr int kBuilderTotalForShape = 20;
constexpr int kEvenSumLimit = 40;

struct Outcome {
    long checked = 0;
    long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failures == 0) first_failure = what();
        ++failures;
    }
};

struct Labelled {
    std::string name;
    Graph graph;
    bool disk_graph;  // complement is co-disk, so H - N[C] must be bipartite at every frontier
};

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "diskclique_acceptance";
    std::filesystem::create_directories(dir);
    return dir;
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

std::string lengths_name(const std::vector<int>& lengths) {
    std::string s;
    for (int len : lengths) s += (s.empty() ? "" : "+") + ("C" + std::to_string(len));
    return s.empty() ? "empty" : s;
}

// Nondecreasing sequences of even lengths >= 4 with sum <= limit, including the empty one.
std::vector<std::vector<int>> even_multisets(int limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_len, int left) -> void {
        out.push_back(cur);
        for (int len = min_len; len <= left; len += 2) {
            cur.push_back(len);
            self(self, len, left - len);
            cur.pop_back();
        }
    };
    rec(rec, 4, limit);
    return out;
}

// Cycle unions with at most one odd cycle and total length <= limit.
std::vector<std::vector<int>> co_disk_cycle_unions(int limit) {
    std::vector<std::vector<int>> out;
    for (const auto& evens : even_multisets(limit)) {
        int sum = 0;
        for (int len : evens) sum += len;
        if (!evens.empty()) out.push_back(evens);
        for (int odd = 3; sum + odd <= limit; odd += 2) {
            auto with = evens;
            with.push_back(odd);
            out.push_back(with);
        }
    }
    return out;
}

std::vector<Labelled> oracle_instances() {
    std::vector<Labelled> out;
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> size(1, kMaxOracleVertices), span(2, 10);
    for (int i = 0; i < 800; ++i) {
        auto rep = random_disks(rng, size(rng), span(rng));
        out.push_back({"random disks #" + std::to_string(i), intersection_graph(rep), true});
    }
    for (const auto& lengths : co_disk_cycle_unions(kBuilderTotalForOracle)) {
        auto rep = build_co_cycles_representation(BuildPlan::from_lengths(lengths));
        out.push_back({"builder " + lengths_name(lengths), intersection_graph(rep), true});
    }
    int made = 0;
    for (int i = 0; made < 240; ++i) {
        int n = 1 + i % 6;
        Graph g = random_graph(rng, n, 0.25 + 0.05 * (i % 7));
        if (n + 2 * static_cast<int>(g.edge_count()) > kMaxOracleVertices) continue;
        ++made;
        out.push_back({"co-2-subdivision #" + std::to_string(i), co_two_subdivision(g), false});
    }
    return out;
}

bool frontier_event(const TraceEvent& e) {
    return e.kind == TraceEvent::Kind::CaseNcc || e.kind == TraceEvent::Kind::CaseOcc;
}

// 1 and 2 (first half): exact solve against the oracle; H - N[C] bipartite on disk graphs.
void oracle_equivalence(const std::vector<Labelled>& instances, Outcome& eq, Outcome& structural) {
    const auto dir = scratch_dir();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        Rational opt = brute_force_max_clique(inst.graph).value;
        SolveReport r = solve_max_clique(inst.graph);
        eq.expect(r.value == opt && r.optimal, [&] { return inst.name + ": solve " + r.value.get_str() + " vs oracle " + opt.get_str(); });

        if (i % 10 == 0) {
            // the same comparison through the command line
            std::string path = (dir / "instance.graph").string();
            write_file(path, emit_graph(inst.graph));
            std::string solve_out, oracle_out;
            int a = cli({"solve", path, "--mode", "exact"}, &solve_out);
            int b = cli({"oracle", path}, &oracle_out);
            std::string value = a == 0 ? Json::parse(solve_out)["value"].get<std::string>() : "?";
            eq.expect(a == 0 && b == 0 && oracle_out.rfind("value " + value + "\n", 0) == 0,
                      [&] { return inst.name + ": cli solve " + value + " vs '" + oracle_out + "'"; });
        }

        if (!inst.disk_graph) continue;
        for (const auto& e : r.trace)
            if (frontier_event(e))
                structural.expect(e.residual_bipartite, [&] { return inst.name + ": H - N[C] not bipartite at depth " + std::to_string(e.depth); });
        structural.expect(!r.certificate, [&] { return inst.name + ": disk graph received a non-membership certificate"; });
    }
}

std::vector<Point> random_polygon(std::mt19937& rng, int k, bool regular) {
    std::uniform_real_distribution<double> pos(-4, 4), rad(0.3, 3), phase(0, 6.3);
    if (regular) return regular_polygon(k, pos(rng), pos(rng), rad(rng), phase(rng));
    std::uniform_int_distribution<int> coord(-4000, 4000);
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) pts.push_back({make_rational(coord(rng), 1000), make_rational(coord(rng), 1000)});
    return pts;
}

// 2 (second half): the parity audit always finds a violated pair and a consistent ledger.
void audit_sweep(Outcome& out) {
    std::mt19937 rng(77);
    const auto path = (scratch_dir() / "pair.cycles").string();
    for (int k1 : {3, 5, 7, 9})
        for (int k2 : {3, 5, 7, 9}) {
            int trials = 0;
            while (trials < kAuditTrialsPerPair) {
                bool regular = trials % 2 == 0;
                auto c1 = random_polygon(rng, k1, regular);
                auto c2 = random_polygon(rng, k2, regular);
                std::vector<Point> all(c1);
                all.insert(all.end(), c2.begin(), c2.end());
                if (find_collinear_triple(all)) continue;
                ++trials;
                auto v = audit_two_odd_cycles(c1, c2);
                bool a_even = true;
                for (const auto& s : v.first) a_even = a_even && s.line_hits % 2 == 0;
                for (const auto& s : v.second) a_even = a_even && s.line_hits % 2 == 0;
                // independent count of pairs where neither line meets the other segment
                long violated = 0;
                for (int i = 0; i < k1; ++i)
                    for (int j = 0; j < k2; ++j) {
                        const Point &a1 = c1[static_cast<std::size_t>(i)], &a2 = c1[static_cast<std::size_t>((i + 1) % k1)];
                        const Point &b1 = c2[static_cast<std::size_t>(j)], &b2 = c2[static_cast<std::size_t>((j + 1) % k2)];
                        bool la = orientation(a1, a2, b1) != orientation(a1, a2, b2);
                        bool lb = orientation(b1, b2, a1) != orientation(b1, b2, a2);
                        violated += !la && !lb;
                    }
                std::string tag = "C" + std::to_string(k1) + "/C" + std::to_string(k2) + " trial " + std::to_string(trials);
                out.expect(violated > 0 && static_cast<long>(v.violations.size()) == violated,
                           [&] { return tag + ": " + std::to_string(violated) + " violated pairs, audit reported " + std::to_string(v.violations.size()); });
                out.expect(a_even && v.sum_c_first % 2 == 0 && v.sum_b_first == v.sum_a_second && v.sum_b_second == v.sum_a_first,
                           [&] { return tag + ": ledger parity broken"; });
                if (trials <= 2) {
                    write_file(path, emit_cycle_pair(c1, c2));
                    std::string text;
                    int code = cli({"audit-odd-cycles", path}, &text);
                    out.expect(code == 0 && text.find("ledger consistent") != std::string::npos && text.find("violated S") != std::string::npos,
                               [&] { return tag + ": audit-odd-cycles exit " + std::to_string(code); });
                }
            }
        }
}

// 3: every plan builds and verifies through the command line; two odd lengths are refused.
void builder_sweep(Outcome& out) {
    const auto dir = scratch_dir();
    const std::string disks = (dir / "rep.disks").string(), graph = (dir / "rep.graph").string();
    std::vector<std::optional<int>> odds{std::nullopt, 3, 5, 7, 9, 11};
    for (const auto& evens : even_multisets(kEvenSumLimit))
        for (const auto& odd : odds) {
            if (evens.empty() && !odd) continue;
            std::vector<std::string> args{"build-rep", "--out", disks, "--graph-out", graph};
            std::string even_list;
            for (int len : evens) even_list += (even_list.empty() ? "" : ",") + std::to_string(len);
            if (!evens.empty()) args.insert(args.end(), {"--even", even_list});
            if (odd) args.insert(args.end(), {"--odd", std::to_string(*odd)});
            auto name = [&] { return "evens {" + even_list + "} odd " + (odd ? std::to_string(*odd) : "none"); };
            int built = cli(args);
            out.expect(built == 0, [&] { return name() + ": build-rep exit " + std::to_string(built); });
            if (built != 0) continue;
            int verified = cli({"verify-rep", disks, graph});
            out.expect(verified == 0, [&] { return name() + ": verify-rep exit " + std::to_string(verified); });
            auto lengths = evens;
            if (odd) lengths.push_back(*odd);
            out.expect(parse_graph(read_file(graph)) == complement(disjoint_cycles(lengths)),
                       [&] { return name() + ": target graph is not the complement of the cycles"; });
        }
    for (const std::string evens : {"", "4", "4,6"})
        for (int a = 3; a <= 11; a += 2)
            for (int b = a; b <= 11; b += 2) {
                std::vector<std::string> args{"build-rep", "--odd", std::to_string(a) + "," + std::to_string(b)};
                if (!evens.empty()) args.insert(args.end(), {"--even", evens});
                int code = cli(args);
                out.expect(code == 65, [&] { return "two odd cycles " + std::to_string(a) + "," + std::to_string(b) + ": exit " + std::to_string(code); });
            }
}

// 4: triangle gadgets equal the co-2-subdivision, compared through the command line.
void gadget_sweep(Outcome& out) {
    const auto dir = scratch_dir();
    const std::string graph = (dir / "gadget.graph").string();
    std::mt19937 rng(4646);
    std::vector<Graph> sample{cycles({3, 3})};
    while (static_cast<int>(sample.size()) < kGadgetSamples) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 7));
        if (g.edge_count() >= 1 && g.edge_count() <= 10) sample.push_back(g);
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
        write_file(graph, emit_graph(sample[i]));
        std::string tri_text, co_text;
        int a = cli({"gen-triangles", graph}, &tri_text);
        int b = cli({"gen-co2sub", graph}, &co_text);
        bool ok = a == 0 && b == 0;
        if (ok) ok = triangle_intersection_graph(parse_triangles(tri_text)) == parse_graph(co_text) &&
                     parse_graph(co_text) == co_two_subdivision(sample[i]);
        out.expect(ok, [&] { return "sample " + std::to_string(i) + ": gadget graph differs (exits " + std::to_string(a) + "," + std::to_string(b) + ")"; });
        if (i == 0 && ok) {
            Graph g = parse_graph(co_text);
            // 2-regular on 18 vertices with odd girth 9 can only be C9+C9
            Graph h = complement(g);
            bool two_regular = true;
            for (Vertex v = 0; v < h.vertex_count(); ++v) two_regular = two_regular && h.degree(v) == 2;
            out.expect(g.vertex_count() == 18 && g.edge_count() == 135 && two_regular && brute_force_odd_girth(h) == 9,
                       [&] { return "C3+C3: expected 18 vertices, 135 edges, complement C9+C9"; });
        }
    }
}

// 5: cover deletion never overshoots and loses at most |X|; thread count does not change reports.
void qptas_sweep(const std::vector<Labelled>& instances, Outcome& out) {
    for (const auto& inst : instances) {
        Rational opt = brute_force_max_clique(inst.graph).value;
        for (int variant = 0; variant < 2; ++variant) {
            SolveConfig cfg;
            cfg.mode = variant == 0 ? SolveMode::Qptas : SolveMode::Approx;
            SolveReport one = solve_max_clique(inst.graph, cfg);
            out.expect(one.value <= opt && opt - one.cover_size <= one.value,
                       [&] { return inst.name + " (" + to_string(cfg.mode) + "): value " + one.value.get_str() + ", opt " + opt.get_str() + ", |X| " + std::to_string(one.cover_size); });
            cfg.threads = 4;
            SolveReport four = solve_max_clique(inst.graph, cfg);
            out.expect(report_json(one, inst.graph).dump() == report_json(four, inst.graph).dump(),
                       [&] { return inst.name + " (" + to_string(cfg.mode) + "): 1-thread and 4-thread reports differ"; });
        }
    }
}

// 6: enumeration on builder-output complements is the pruned subset count of the smaller set.
void enumeration_shape(Outcome& out) {
    for (const auto& lengths : co_disk_cycle_unions(kBuilderTotalForShape)) {
        Graph g = intersection_graph(build_co_cycles_representation(BuildPlan::from_lengths(lengths)));
        Graph h = complement(g);
        const std::string name = lengths_name(lengths);

        SolveConfig whole;
        whole.policy = ThresholdPolicy::constant(h.vertex_count() + 1);
        SolveReport r = solve_max_clique(g, whole);
        auto c = shortest_odd_cycle(h);
        if (!c) {
            out.expect(r.trace.size() == 1 && r.trace[0].kind == TraceEvent::Kind::Bipartite, [&] { return name + ": expected a bipartite frontier"; });
            continue;
        }
        VertexSet nc = closed_neighborhood(h, c->vertices);
        VertexSet x = odd_cycle_cover(h).vertices;
        const VertexSet& chosen = nc.size() <= x.size() ? nc : x;
        const auto& e = r.trace.at(0);
        out.expect(r.trace.size() == 1 && frontier_event(e), [&] { return name + ": expected one frontier event"; });
        out.expect(e.enumerated == count_independent_subsets(h, chosen) && e.set_size == static_cast<int>(chosen.size()),
                   [&] { return name + ": enumerated " + std::to_string(e.enumerated) + " subsets of a set of size " + std::to_string(e.set_size); });
        out.expect(static_cast<int>(nc.size()) <= c->length() * (h.max_degree() - 1),
                   [&] { return name + ": |N[C]| = " + std::to_string(nc.size()) + " exceeds c(D-1)"; });

        // the same bound read from the trace of a default run
        for (const auto& ev : solve_max_clique(g).trace) {
            if (!frontier_event(ev)) continue;
            int ncc = ev.kind == TraceEvent::Kind::CaseNcc ? ev.set_size : ev.alternative_size;
            out.expect(ncc <= ev.odd_girth * (ev.max_degree - 1), [&] { return name + ": trace |N[C]| bound fails"; });
            out.expect(ev.set_size <= ev.alternative_size, [&] { return name + ": larger enumeration chosen"; });
        }
    }
}

// 7: normalizers keep the graph and leave no collinear centre triple.
void normalizer_sweep(Outcome& out) {
    std::mt19937 rng(2223);
    std::uniform_int_distribution<int> size(1, 20), span(1, 6);
    for (int i = 0; i < kNormalizerSamples; ++i) {
        auto rep = random_disks(rng, size(rng), span(rng));
        Graph before = intersection_graph(rep);
        auto proper = make_proper(rep);
        auto general = perturb_general_position(proper);
        out.expect(intersection_graph(proper) == before && intersection_graph(general) == before,
                   [&] { return "representation " + std::to_string(i) + ": intersection graph changed"; });
        out.expect(!find_collinear_triple(centers(general)), [&] { return "representation " + std::to_string(i) + ": collinear centres remain"; });
    }
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    bool all_pass = true;
    auto report = [&](int number, const std::string& title, const Outcome& o, bool extra_ok = true, const std::string& extra = "") {
        bool pass = o.failures <= kMaxFailures && o.checked > 0 && extra_ok;
        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << o.checked << " checks, "
                  << o.failures << " failures" << (extra.empty() ? "" : ", " + extra) << ")";
        if (o.failures) std::cout << " first: " << o.first_failure;
        std::cout << std::endl;
    };
    auto seconds = [](clock::time_point t0) {
        std::ostringstream s;
        s.precision(1);
        s << std::fixed << std::chrono::duration<double>(clock::now() - t0).count() << "s";
        return s.str();
    };

    auto t0 = clock::now();
    auto instances = oracle_instances();
    Outcome eq, structural;
    oracle_equivalence(instances, eq, structural);
    const int count = static_cast<int>(instances.size());
    report(1, "exact solve equals oracle", eq, count >= kMinOracleInstances, std::to_string(count) + " instances, " + seconds(t0));

    t0 = clock::now();
    audit_sweep(structural);
    report(2, "H - N[C] bipartite on disk graphs and parity audit of odd pairs", structural, true, seconds(t0));

    t0 = clock::now();
    Outcome build;
    builder_sweep(build);
    report(3, "build-rep then verify-rep for all plans, two odd lengths refused", build, true, seconds(t0));

    t0 = clock::now();
    Outcome gadget;
    gadget_sweep(gadget);
    report(4, "triangle gadget equals co-2-subdivision", gadget, true, seconds(t0));

    t0 = clock::now();
    Outcome qptas;
    qptas_sweep(instances, qptas);
    report(5, "cover-deletion bound and thread-independent reports", qptas, true, seconds(t0));

    t0 = clock::now();
    Outcome shape;
    enumeration_shape(shape);
    report(6, "enumeration size and |N[C]| <= c(D-1) on builder complements", shape, true, seconds(t0));

    t0 = clock::now();
    Outcome normal;
    normalizer_sweep(normal);
    report(7, "normalizers preserve graphs and general position", normal, true, seconds(t0));

    std::filesystem::remove_all(scratch_dir());
    return all_pass ? 0 : 1;
}
