#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "geometry.hpp"
#include "solver.hpp"
#include "triangles.hpp"

namespace diskclique {

namespace detail {

struct TextLine {
    int number;
    std::vector<std::string> tokens;
};

// Non-blank lines with `#` comments stripped, split on whitespace.
inline std::vector<TextLine> tokenize(std::string_view text) {
    std::vector<TextLine> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        TextLine line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
        pos = end + 1;
    }
    return out;
}

inline Rational rational_field(const std::string& tok, int line, const char* what) {
    auto q = parse_rational(tok);
    if (!q) throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
    return *q;
}

inline int int_field(const std::string& tok, int line, const char* what) {
    auto q = parse_rational(tok);
    if (!q || q->get_den() != 1 || !q->get_num().fits_sint_p())
        throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
    return static_cast<int>(q->get_num().get_si());
}

inline void expect_arity(const TextLine& l, std::size_t lo, std::size_t hi) {
    if (l.tokens.size() < lo || l.tokens.size() > hi)
        throw ParseError("'" + l.tokens[0] + "' line has " + std::to_string(l.tokens.size() - 1) + " fields", l.number);
}

}  // namespace detail

// --- graphs ------------------------------------------------------------------------------------

inline Graph parse_graph(std::string_view text) {
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "graph") throw ParseError("expected 'graph <n>' header", lines.empty() ? 1 : lines[0].number);
    detail::expect_arity(lines[0], 2, 2);
    int n = detail::int_field(lines[0].tokens[1], lines[0].number, "vertex count");
    if (n < 0) throw ParseError("negative vertex count", lines[0].number);
    Graph g(n);
    bool weights_seen = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto& kw = l.tokens[0];
        if (kw == "weights") {
            if (weights_seen) throw ParseError("second 'weights' line", l.number);
            if (g.edge_count() > 0) throw ParseError("'weights' must precede the edges", l.number);
            detail::expect_arity(l, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
            for (int v = 0; v < n; ++v) {
                Rational w = detail::rational_field(l.tokens[static_cast<std::size_t>(v) + 1], l.number, "weight");
                if (sgn(w) < 0) throw ParseError("negative weight for vertex " + std::to_string(v), l.number);
                g.set_weight(v, w);
            }
            weights_seen = true;
        } else if (kw == "edge") {
            detail::expect_arity(l, 3, 3);
            int u = detail::int_field(l.tokens[1], l.number, "vertex id");
            int v = detail::int_field(l.tokens[2], l.number, "vertex id");
            if (!g.contains(u) || !g.contains(v))
                throw ParseError("vertex id out of range in edge " + std::to_string(u) + " " + std::to_string(v), l.number);
            if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), l.number);
            if (!g.add_edge(u, v)) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), l.number);
        } else {
            throw ParseError("unknown line '" + kw + "'", l.number);
        }
    }
    return g;
}

inline std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << "\n";
    if (!g.unit_weights()) {
        out << "weights";
        for (const auto& w : g.weights()) out << ' ' << w.get_str();
        out << "\n";
    }
    for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << "\n";
    return out.str();
}

// --- disks ---------------------------------------------------------------------------------

inline Representation parse_disks(std::string_view text) {
    auto lines = detail::tokenize(text);
    std::vector<std::optional<Disk>> slots;
    std::vector<std::string> labels;
    bool any_label = false;
    for (const auto& l : lines) {
        if (l.tokens[0] != "disk") throw ParseError("unknown line '" + l.tokens[0] + "'", l.number);
        detail::expect_arity(l, 5, 6);
        int id = detail::int_field(l.tokens[1], l.number, "disk id");
        if (id < 0) throw ParseError("negative disk id", l.number);
        Rational x = detail::rational_field(l.tokens[2], l.number, "x");
        Rational y = detail::rational_field(l.tokens[3], l.number, "y");
        Rational r = detail::rational_field(l.tokens[4], l.number, "radius");
        if (sgn(r) <= 0) throw ParseError("radius must be positive, got " + r.get_str(), l.number);
        if (static_cast<std::size_t>(id) >= slots.size()) {
            slots.resize(static_cast<std::size_t>(id) + 1);
            labels.resize(static_cast<std::size_t>(id) + 1);
        }
        if (slots[static_cast<std::size_t>(id)]) throw ParseError("duplicate disk id " + std::to_string(id), l.number);
        slots[static_cast<std::size_t>(id)] = Disk(x, y, r);
        if (l.tokens.size() == 6) {
            labels[static_cast<std::size_t>(id)] = l.tokens[5];
            any_label = true;
        }
    }
    if (slots.empty()) throw ParseError("no disks");
    Representation rep;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) throw ParseError("disk ids are not dense: " + std::to_string(i) + " is missing");
        rep.disks.push_back(*slots[i]);
    }
    if (any_label) rep.labels = std::move(labels);
    return rep;
}

inline std::string emit_disks(const Representation& rep) {
    std::ostringstream out;
    for (int i = 0; i < rep.size(); ++i) {
        const auto& d = rep.disks[static_cast<std::size_t>(i)];
        out << "disk " << i << ' ' << d.center.x.get_str() << ' ' << d.center.y.get_str() << ' ' << d.radius.get_str();
        if (!rep.labels.empty() && !rep.labels[static_cast<std::size_t>(i)].empty()) out << ' ' << rep.labels[static_cast<std::size_t>(i)];
        out << "\n";
    }
    return out.str();
}

// --- triangles -----------------------------------------------------------------------------

inline std::vector<Triangle> parse_triangles(std::string_view text) {
    auto lines = detail::tokenize(text);
    std::vector<std::optional<Triangle>> slots;
    for (const auto& l : lines) {
        if (l.tokens[0] != "triangle") throw ParseError("unknown line '" + l.tokens[0] + "'", l.number);
        detail::expect_arity(l, 8, 8);
        int id = detail::int_field(l.tokens[1], l.number, "triangle id");
        if (id < 0) throw ParseError("negative triangle id", l.number);
        std::array<Point, 3> pts;
        for (std::size_t c = 0; c < 3; ++c)
            pts[c] = {detail::rational_field(l.tokens[2 + 2 * c], l.number, "coordinate"),
                      detail::rational_field(l.tokens[3 + 2 * c], l.number, "coordinate")};
        if (orientation(pts[0], pts[1], pts[2]) == 0) throw ParseError("degenerate triangle " + std::to_string(id), l.number);
        if (static_cast<std::size_t>(id) >= slots.size()) slots.resize(static_cast<std::size_t>(id) + 1);
        if (slots[static_cast<std::size_t>(id)]) throw ParseError("duplicate triangle id " + std::to_string(id), l.number);
        slots[static_cast<std::size_t>(id)] = Triangle(pts[0], pts[1], pts[2]);
    }
    if (slots.empty()) throw ParseError("no triangles");
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) throw ParseError("triangle ids are not dense: " + std::to_string(i) + " is missing");
        out.push_back(*slots[i]);
    }
    return out;
}

inline std::string emit_triangles(const std::vector<Triangle>& ts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out << "triangle " << i;
        for (const Point* p : ts[i].corners()) out << ' ' << p->x.get_str() << ' ' << p->y.get_str();
        out << "\n";
    }
    return out.str();
}

// --- two polygons for the parity audit ----------------------------------------------------

inline std::pair<std::vector<Point>, std::vector<Point>> parse_cycle_pair(std::string_view text) {
    auto lines = detail::tokenize(text);
    std::vector<std::vector<Point>> cycles;
    for (const auto& l : lines) {
        if (l.tokens[0] != "cycle") throw ParseError("unknown line '" + l.tokens[0] + "'", l.number);
        if (l.tokens.size() % 2 == 0) throw ParseError("cycle needs x y pairs", l.number);
        std::vector<Point> pts;
        for (std::size_t i = 1; i + 1 < l.tokens.size(); i += 2)
            pts.push_back({detail::rational_field(l.tokens[i], l.number, "x"), detail::rational_field(l.tokens[i + 1], l.number, "y")});
        cycles.push_back(std::move(pts));
    }
    if (cycles.size() != 2) throw ParseError("expected exactly two 'cycle' lines, got " + std::to_string(cycles.size()));
    return {std::move(cycles[0]), std::move(cycles[1])};
}

inline std::string emit_cycle_pair(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::ostringstream out;
    for (const auto* c : {&a, &b}) {
        out << "cycle";
        for (const auto& p : *c) out << ' ' << p.x.get_str() << ' ' << p.y.get_str();
        out << "\n";
    }
    return out.str();
}

// --- instances -----------------------------------------------------------------------------

enum class InstanceKind { Graph, Disks, Triangles };

struct Instance {
    InstanceKind kind = InstanceKind::Graph;
    Graph graph;  // the graph to solve: given directly or the intersection graph
    Representation disks;
    std::vector<Triangle> triangles;
};

/// Dispatches on the first keyword: `graph`, `disk` or `triangle`.
inline Instance parse_instance(std::string_view text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError("empty instance");
    const auto& kw = lines[0].tokens[0];
    Instance inst;
    if (kw == "graph") {
        inst.graph = parse_graph(text);
    } else if (kw == "disk") {
        inst.kind = InstanceKind::Disks;
        inst.disks = parse_disks(text);
        inst.graph = intersection_graph(inst.disks);
    } else if (kw == "triangle") {
        inst.kind = InstanceKind::Triangles;
        inst.triangles = parse_triangles(text);
        inst.graph = triangle_intersection_graph(inst.triangles);
    } else {
        throw ParseError("unknown instance kind '" + kw + "'", lines[0].number);
    }
    return inst;
}

class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path);
    out << content;
}

// --- reports -------------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json trace_event_json(const TraceEvent& e) {
    Json j;
    j["kind"] = to_string(e.kind);
    j["depth"] = e.depth;
    j["n"] = e.subproblem_size;
    switch (e.kind) {
        case TraceEvent::Kind::Branch:
            j["vertex"] = e.vertex;
            j["degree"] = e.degree;
            break;
        case TraceEvent::Kind::Bipartite:
            j["max_degree"] = e.max_degree;
            break;
        case TraceEvent::Kind::CaseOcc:
        case TraceEvent::Kind::CaseNcc:
        case TraceEvent::Kind::CoverDeletion:
            j["c"] = e.odd_girth;
            j["max_degree"] = e.max_degree;
            j["set_size"] = e.set_size;
            if (e.kind != TraceEvent::Kind::CoverDeletion) j["alternative_size"] = e.alternative_size;
            j["cover_rounds"] = e.cover_rounds;
            j["enumerated"] = e.enumerated;
            if (e.kind != TraceEvent::Kind::CoverDeletion) j["residual_bipartite"] = e.residual_bipartite;
            j["capped"] = e.capped;
            break;
    }
    return j;
}

inline Json report_json(const SolveReport& r, const Graph& g) {
    Json j;
    j["value"] = r.value.get_str();
    j["clique"] = r.clique;
    j["optimal"] = r.optimal;
    j["capped"] = r.capped;
    j["mode"] = to_string(r.mode);
    j["policy"] = r.policy;
    j["threshold"] = r.threshold;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    Json trace = Json::array();
    for (const auto& e : r.trace) trace.push_back(trace_event_json(e));
    j["trace"] = std::move(trace);
    j["trace_truncated"] = r.trace_truncated;
    j["stats"] = {{"branch_nodes", r.stats.branch_nodes}, {"leaves", r.stats.leaves}, {"enumerated", r.stats.enumerated}};
    if (r.certificate)
        j["certificate"] = {{"kind", "two_anticomplete_odd_cycles"},
                            {"cycle_a", r.certificate->cycle_a.vertices},
                            {"cycle_b", r.certificate->cycle_b.vertices}};
    else
        j["certificate"] = nullptr;
    if (r.mode != SolveMode::Exact) {
        j["epsilon"] = r.epsilon.get_str();
        j["base_case"] = "odd_cycle_cover_deletion";
        j["cover_size"] = r.cover_size;
        j["additive_bound"] = r.additive_bound.get_str();
    }
    return j;
}

}  // namespace diskclique
