#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "bipartite_mis.hpp"
#include "graph.hpp"

namespace diskclique {

enum class SolveMode { Exact, Approx, Qptas };

inline const char* to_string(SolveMode m) {
    switch (m) {
        case SolveMode::Exact: return "exact";
        case SolveMode::Approx: return "approx";
        case SolveMode::Qptas: return "qptas";
    }
    return "?";
}

struct ThresholdPolicy {
    enum class Kind { WinWinCubeRoot, QptasLog4, Fixed };
    Kind kind = Kind::WinWinCubeRoot;
    int fixed = 1;

    static ThresholdPolicy cube_root() { return {Kind::WinWinCubeRoot, 1}; }
    static ThresholdPolicy log4() { return {Kind::QptasLog4, 1}; }
    static ThresholdPolicy constant(int k) { return {Kind::Fixed, k}; }

    std::string name() const {
        switch (kind) {
            case Kind::WinWinCubeRoot: return "winwin_cuberoot";
            case Kind::QptasLog4: return "qptas_log4";
            case Kind::Fixed: return "fixed(" + std::to_string(fixed) + ")";
        }
        return "?";
    }
};

struct SolveConfig {
    SolveMode mode = SolveMode::Exact;
    Rational epsilon{1, 10};
    std::optional<ThresholdPolicy> policy;  // default: cube root, or log4 in qptas mode
    std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
    int threads = 1;
    std::size_t trace_limit = 10000;

    void validate() const {
        if (sgn(epsilon) <= 0) throw PreconditionError("epsilon must be positive");
        if (enumeration_cap < 1) throw PreconditionError("enumeration cap must be at least 1");
        if (threads < 1) throw PreconditionError("threads must be at least 1");
        if (policy && policy->kind == ThresholdPolicy::Kind::Fixed && policy->fixed < 1)
            throw PreconditionError("fixed branching threshold must be at least 1");
    }

    ThresholdPolicy effective_policy() const {
        if (policy) return *policy;
        return mode == SolveMode::Qptas ? ThresholdPolicy::log4() : ThresholdPolicy::cube_root();
    }
};

/// Smallest t with t^3 >= n.
inline int cube_root_threshold(int n) {
    int t = 1;
    while (static_cast<long long>(t) * t * t < n) ++t;
    return t;
}

/// ceil(n / ln^4 n), never below 1.
inline int log4_threshold(int n) {
    if (n <= 2) return 1;
    double l = std::log(static_cast<double>(n));
    double t = n / (l * l * l * l);
    return std::max(1, static_cast<int>(std::ceil(t)));
}

inline int branching_threshold(const ThresholdPolicy& p, int n) {
    switch (p.kind) {
        case ThresholdPolicy::Kind::WinWinCubeRoot: return cube_root_threshold(n);
        case ThresholdPolicy::Kind::QptasLog4: return log4_threshold(n);
        case ThresholdPolicy::Kind::Fixed: return p.fixed;
    }
    return 1;
}

/// Two vertex-disjoint, anticomplete, chordless odd cycles in the complement: the input is
/// not a disk graph.
struct NotCoDiskEvidence {
    OddCycle cycle_a;
    OddCycle cycle_b;
};

/// Checks the evidence against h (the complement of the solved graph).
inline bool evidence_holds(const Graph& h, const NotCoDiskEvidence& ev) {
    auto cycle_ok = [&](const OddCycle& c) {
        const int len = c.length();
        if (len < 3 || len % 2 == 0) return false;
        for (Vertex v : c.vertices)
            if (!h.contains(v)) return false;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                Vertex a = c.vertices[static_cast<std::size_t>(i)], b = c.vertices[static_cast<std::size_t>(j)];
                if (a == b) return false;
                bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if (h.has_edge(a, b) != consecutive) return false;
            }
        return true;
    };
    if (!cycle_ok(ev.cycle_a) || !cycle_ok(ev.cycle_b)) return false;
    for (Vertex a : ev.cycle_a.vertices)
        for (Vertex b : ev.cycle_b.vertices)
            if (a == b || h.has_edge(a, b)) return false;
    return true;
}

struct TraceEvent {
    enum class Kind { Branch, Bipartite, CaseOcc, CaseNcc, CoverDeletion };
    Kind kind = Kind::Branch;
    int depth = 0;
    Vertex vertex = -1;       // Branch: the vertex branched on
    int degree = 0;           // Branch: its degree
    int subproblem_size = 0;  // vertices of the current complement subproblem
    int odd_girth = 0;        // c
    int max_degree = 0;       // Δ of the subproblem
    int set_size = 0;         // |N[C]| for CaseNcc, |X| otherwise
    int alternative_size = 0; // the enumeration set that was not chosen
    int cover_rounds = 0;
    std::uint64_t enumerated = 0;
    bool residual_bipartite = true;
    bool capped = false;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

inline const char* to_string(TraceEvent::Kind k) {
    switch (k) {
        case TraceEvent::Kind::Branch: return "branch";
        case TraceEvent::Kind::Bipartite: return "bipartite";
        case TraceEvent::Kind::CaseOcc: return "case_occ";
        case TraceEvent::Kind::CaseNcc: return "case_ncc";
        case TraceEvent::Kind::CoverDeletion: return "cover_deletion";
    }
    return "?";
}

struct SolveStats {
    long long branch_nodes = 0;
    long long leaves = 0;
    std::uint64_t enumerated = 0;
    friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveReport {
    VertexSet clique;
    Rational value{0};
    bool optimal = true;
    bool capped = false;
    SolveMode mode = SolveMode::Exact;
    Rational epsilon{0};  // approximate modes only; recorded, not used by the cover-deletion base case
    std::string policy;
    int threshold = 1;
    std::vector<TraceEvent> trace;
    bool trace_truncated = false;
    SolveStats stats;
    std::optional<NotCoDiskEvidence> certificate;
    int cover_size = 0;          // largest |X| deleted at a frontier (approximate modes)
    Rational additive_bound{0};  // largest w(X) deleted at a frontier
};

/// Result of one independent-set computation on a complement subproblem.
struct MisResult {
    VertexSet set;
    Rational value{0};
    std::uint64_t enumerated = 0;
    bool capped = false;
    int set_size = 0;
    std::optional<NotCoDiskEvidence> evidence;
    bool residual_bipartite = true;
};

namespace detail {

inline bool better(const Rational& va, const VertexSet& a, const Rational& vb, const VertexSet& b) {
    int c = cmp(va, vb);
    if (c != 0) return c > 0;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline VertexSet lift(const VertexSet& local, const std::vector<Vertex>& original) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(original[static_cast<std::size_t>(v)]);
    return out;
}

inline VertexSet solve_bipartite(const Graph& h) {
    auto coloring = is_bipartite(h);
    if (!coloring) throw VerificationError("expected a bipartite subproblem");
    return max_independent_set_bipartite(h, *coloring);
}

// Every independent I inside `s` (pruned recursion, s in increasing order), completed by the
// bipartite optimum of h - (s u N(I)). At most `cap` subsets are visited.
inline MisResult enumerate_and_complete(const Graph& h, const VertexSet& s, std::uint64_t cap) {
    const int n = h.vertex_count();
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex v : s) in_s[static_cast<std::size_t>(v)] = 1;

    MisResult best;
    best.set_size = static_cast<int>(s.size());
    bool have = false;
    std::vector<int> blocked(static_cast<std::size_t>(n), 0);
    VertexSet chosen;

    auto visit = [&] {
        ++best.enumerated;
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (!in_s[static_cast<std::size_t>(v)] && !blocked[static_cast<std::size_t>(v)]) rest.push_back(v);
        Subgraph sub = induced_subgraph(h, rest);
        VertexSet cand = chosen;
        for (Vertex v : lift(solve_bipartite(sub.graph), sub.original)) cand.push_back(v);
        std::sort(cand.begin(), cand.end());
        Rational value = h.total_weight(cand);
        if (!have || better(value, cand, best.value, best.set)) {
            best.value = value;
            best.set = std::move(cand);
            have = true;
        }
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (best.capped) return;
        if (i == s.size()) {
            if (best.enumerated >= cap) {
                best.capped = true;
                return;
            }
            visit();
            return;
        }
        Vertex v = s[i];
        if (!blocked[static_cast<std::size_t>(v)]) {
            chosen.push_back(v);
            ++blocked[static_cast<std::size_t>(v)];
            for (Vertex w : h.neighbors(v)) ++blocked[static_cast<std::size_t>(w)];
            self(self, i + 1);
            for (Vertex w : h.neighbors(v)) --blocked[static_cast<std::size_t>(w)];
            --blocked[static_cast<std::size_t>(v)];
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    recurse(recurse, 0);
    return best;
}

// C together with a shortest odd cycle of h - N[C], both in ids of h.
inline std::optional<NotCoDiskEvidence> evidence_from(const OddCycle& c, const Subgraph& residual) {
    auto second = shortest_odd_cycle(residual.graph);
    if (!second) return std::nullopt;
    return NotCoDiskEvidence{c, {lift(second->vertices, residual.original)}};
}

}  // namespace detail

/// Cover enumeration: guess I = OPT ∩ X over the odd cycle cover X, finish with bipartite matching.
inline MisResult mis_via_occ(const Graph& h, std::uint64_t cap = std::uint64_t{1} << 22) {
    auto cover = odd_cycle_cover(h);
    return detail::enumerate_and_complete(h, cover.vertices, cap);
}

/// Neighbourhood enumeration: enumerate independent subsets of N[C] for a shortest odd cycle C. When
/// h - N[C] is not bipartite the complement of h is not a disk graph; the evidence is
/// attached and the answer comes from mis_via_occ instead.
inline MisResult mis_via_ncc(const Graph& h, std::uint64_t cap = std::uint64_t{1} << 22) {
    auto cycle = shortest_odd_cycle(h);
    if (!cycle) {
        MisResult r;
        r.set = detail::solve_bipartite(h);
        r.value = h.total_weight(r.set);
        r.enumerated = 1;
        return r;
    }
    VertexSet nc = closed_neighborhood(h, cycle->vertices);
    Subgraph residual = induced_subgraph(h, remaining_vertices(h, nc));
    if (is_bipartite(residual.graph)) return detail::enumerate_and_complete(h, nc, cap);
    MisResult r = mis_via_occ(h, cap);
    r.residual_bipartite = false;
    r.evidence = detail::evidence_from(*cycle, residual);
    return r;
}

namespace detail {

struct Partial {
    VertexSet set;  // ids of the top-level complement
    Rational value{0};
    std::vector<TraceEvent> trace;
    bool trace_truncated = false;
    bool capped = false;
    SolveStats stats;
    std::optional<NotCoDiskEvidence> evidence;
    int cover_size = 0;
    Rational additive_bound{0};
};

class WinWin {
public:
    WinWin(const SolveConfig& cfg, int threshold) : cfg_(cfg), threshold_(threshold) {
        for (int t = 1; t < cfg.threads; t *= 2) ++spawn_depth_;
    }

    Partial run(const Graph& h, const std::vector<Vertex>& original, int depth) const {
        Partial out;
        Vertex pick = -1;
        int pick_degree = 0;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > pick_degree) {
                pick = v;
                pick_degree = h.degree(v);
            }
        if (pick < 0 || pick_degree < threshold_) return frontier(h, original, depth);

        TraceEvent ev;
        ev.kind = TraceEvent::Kind::Branch;
        ev.depth = depth;
        ev.vertex = original[static_cast<std::size_t>(pick)];
        ev.degree = pick_degree;
        ev.subproblem_size = h.vertex_count();
        ev.max_degree = pick_degree;

        VertexSet taken{pick};
        Subgraph with = induced_subgraph(h, remaining_vertices(h, closed_neighborhood(h, taken)));
        Subgraph without = induced_subgraph(h, remaining_vertices(h, taken));
        auto with_ids = lift(with.original, original);
        auto without_ids = lift(without.original, original);

        Partial inc, exc;
        if (depth < spawn_depth_) {
            auto fut = std::async(std::launch::async, [&] { return run(with.graph, with_ids, depth + 1); });
            exc = run(without.graph, without_ids, depth + 1);
            inc = fut.get();
        } else {
            inc = run(with.graph, with_ids, depth + 1);
            exc = run(without.graph, without_ids, depth + 1);
        }
        inc.value += h.weight(pick);
        inc.set.insert(std::lower_bound(inc.set.begin(), inc.set.end(), ev.vertex), ev.vertex);

        out = better(exc.value, exc.set, inc.value, inc.set) ? exc : inc;
        out.trace.clear();
        out.trace_truncated = false;
        append(out, {ev});
        append(out, inc.trace);
        append(out, exc.trace);
        out.trace_truncated = out.trace_truncated || inc.trace_truncated || exc.trace_truncated;
        out.capped = inc.capped || exc.capped;
        out.stats.branch_nodes = 1 + inc.stats.branch_nodes + exc.stats.branch_nodes;
        out.stats.leaves = inc.stats.leaves + exc.stats.leaves;
        out.stats.enumerated = inc.stats.enumerated + exc.stats.enumerated;
        out.evidence = inc.evidence ? inc.evidence : exc.evidence;
        out.cover_size = std::max(inc.cover_size, exc.cover_size);
        out.additive_bound = std::max(inc.additive_bound, exc.additive_bound);
        return out;
    }

private:
    void append(Partial& p, const std::vector<TraceEvent>& events) const {
        for (const auto& e : events) {
            if (p.trace.size() >= cfg_.trace_limit) {
                p.trace_truncated = true;
                return;
            }
            p.trace.push_back(e);
        }
    }

    Partial frontier(const Graph& h, const std::vector<Vertex>& original, int depth) const {
        Partial out;
        out.stats.leaves = 1;
        TraceEvent ev;
        ev.depth = depth;
        ev.subproblem_size = h.vertex_count();
        ev.max_degree = h.max_degree();

        auto cycle = shortest_odd_cycle(h);
        if (!cycle) {
            ev.kind = TraceEvent::Kind::Bipartite;
            ev.enumerated = 1;
            VertexSet s = solve_bipartite(h);
            out.set = lift(s, original);
            out.value = h.total_weight(s);
            out.stats.enumerated = 1;
            append(out, {ev});
            return out;
        }
        ev.odd_girth = cycle->length();
        auto cover = odd_cycle_cover(h);
        ev.cover_rounds = cover.rounds;

        if (cfg_.mode != SolveMode::Exact) {
            ev.kind = TraceEvent::Kind::CoverDeletion;
            ev.set_size = static_cast<int>(cover.vertices.size());
            ev.enumerated = 1;
            Subgraph rest = induced_subgraph(h, remaining_vertices(h, cover.vertices));
            VertexSet s = lift(solve_bipartite(rest.graph), rest.original);
            out.set = lift(s, original);
            out.value = h.total_weight(s);
            out.stats.enumerated = 1;
            out.cover_size = ev.set_size;
            out.additive_bound = h.total_weight(cover.vertices);
            append(out, {ev});
            return out;
        }

        VertexSet nc = closed_neighborhood(h, cycle->vertices);
        Subgraph residual = induced_subgraph(h, remaining_vertices(h, nc));
        ev.residual_bipartite = is_bipartite(residual.graph).has_value();
        MisResult r;
        if (ev.residual_bipartite && nc.size() <= cover.vertices.size()) {
            ev.kind = TraceEvent::Kind::CaseNcc;
            ev.set_size = static_cast<int>(nc.size());
            ev.alternative_size = static_cast<int>(cover.vertices.size());
            r = enumerate_and_complete(h, nc, cfg_.enumeration_cap);
        } else {
            ev.kind = TraceEvent::Kind::CaseOcc;
            ev.set_size = static_cast<int>(cover.vertices.size());
            ev.alternative_size = static_cast<int>(nc.size());
            r = enumerate_and_complete(h, cover.vertices, cfg_.enumeration_cap);
            if (!ev.residual_bipartite) {
                auto local = evidence_from(*cycle, residual);
                if (local)
                    out.evidence = NotCoDiskEvidence{{lift(local->cycle_a.vertices, original)},
                                                     {lift(local->cycle_b.vertices, original)}};
            }
        }
        ev.enumerated = r.enumerated;
        ev.capped = r.capped;
        out.set = lift(r.set, original);
        out.value = r.value;
        out.capped = r.capped;
        out.stats.enumerated = r.enumerated;
        append(out, {ev});
        return out;
    }

    const SolveConfig& cfg_;
    int threshold_;
    int spawn_depth_ = 0;
};

}  // namespace detail

/// Exact MIS of h: branch on a maximum-degree vertex (lowest id on ties) while its degree is at
/// least `threshold`, then finish each frontier by enumerating over the cover or over N[C].
inline MisResult branch_high_degree(const Graph& h, int threshold, std::uint64_t cap = std::uint64_t{1} << 22) {
    if (threshold < 1) throw PreconditionError("branching threshold must be at least 1");
    SolveConfig cfg;
    cfg.enumeration_cap = cap;
    cfg.trace_limit = 0;
    std::vector<Vertex> ids(static_cast<std::size_t>(h.vertex_count()));
    for (Vertex v = 0; v < h.vertex_count(); ++v) ids[static_cast<std::size_t>(v)] = v;
    auto p = detail::WinWin(cfg, threshold).run(h, ids, 0);
    MisResult r;
    r.set = std::move(p.set);
    r.value = p.value;
    r.enumerated = p.stats.enumerated;
    r.capped = p.capped;
    r.evidence = std::move(p.evidence);
    r.residual_bipartite = !r.evidence;
    return r;
}

/// Maximum (weighted) clique of g through independent sets of its complement.
inline SolveReport solve_max_clique(const Graph& g, const SolveConfig& cfg = {}) {
    cfg.validate();
    const Graph h = complement(g);
    const auto policy = cfg.effective_policy();

    SolveReport report;
    report.mode = cfg.mode;
    report.epsilon = cfg.epsilon;
    report.policy = policy.name();
    report.threshold = branching_threshold(policy, g.vertex_count());

    std::vector<Vertex> ids(static_cast<std::size_t>(h.vertex_count()));
    for (Vertex v = 0; v < h.vertex_count(); ++v) ids[static_cast<std::size_t>(v)] = v;
    auto p = detail::WinWin(cfg, report.threshold).run(h, ids, 0);

    if (!g.is_clique(p.set)) throw VerificationError("solver produced a vertex set that is not a clique");
    if (g.total_weight(p.set) != p.value) throw VerificationError("solver value disagrees with clique weight");

    report.clique = std::move(p.set);
    report.value = p.value;
    report.capped = p.capped;
    report.trace = std::move(p.trace);
    report.trace_truncated = p.trace_truncated;
    report.stats = p.stats;
    report.certificate = std::move(p.evidence);
    report.cover_size = p.cover_size;
    report.additive_bound = p.additive_bound;
    report.optimal = !p.capped && sgn(p.additive_bound) == 0;
    return report;
}

/// Branch exactly while the complement has a vertex of degree >= n / ln^4 n, then delete an odd
/// cycle cover at each frontier. The value is at most w(X) below the optimum. epsilon is
/// recorded but does not change the computation.
inline SolveReport solve_qptas_mode(const Graph& g, const Rational& epsilon) {
    SolveConfig cfg;
    cfg.mode = SolveMode::Qptas;
    cfg.epsilon = epsilon;
    return solve_max_clique(g, cfg);
}

}  // namespace diskclique
