#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace diskclique {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always kept sorted

/// Undirected simple graph on vertices 0..n-1 with non-negative rational weights (default 1).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)), weights_(static_cast<std::size_t>(n), Rational(1)) {}

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edges_; }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

    /// Adds uv; returns false if it was already present. Self-loops and bad ids throw.
    bool add_edge(Vertex u, Vertex v) {
        if (!contains(u) || !contains(v))
            throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
        auto& au = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v) return false;
        au.insert(it, v);
        auto& av = adj_[static_cast<std::size_t>(v)];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
        ++edges_;
        return true;
    }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& au = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(au.begin(), au.end(), v);
    }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
        return d;
    }

    const Rational& weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
    void set_weight(Vertex v, Rational w) {
        if (sgn(w) < 0) throw PreconditionError("negative weight on vertex " + std::to_string(v));
        weights_[static_cast<std::size_t>(v)] = std::move(w);
    }
    const std::vector<Rational>& weights() const noexcept { return weights_; }

    bool unit_weights() const {
        return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
    }

    Rational total_weight(std::span<const Vertex> vs) const {
        Rational t(0);
        for (Vertex v : vs) t += weight(v);
        return t;
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edges_);
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_independent(std::span<const Vertex> vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (has_edge(vs[i], vs[j])) return false;
        return true;
    }

    bool is_clique(std::span<const Vertex> vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (vs[i] == vs[j] || !has_edge(vs[i], vs[j])) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Rational> weights_;
    std::size_t edges_ = 0;
};

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(n);
    for (Vertex u = 0; u < n; ++u) {
        h.set_weight(u, g.weight(u));
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
    return h;
}

/// An induced subgraph together with the ids its vertices had in the parent.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> original;  // local id -> parent id, increasing
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> ids(keep.begin(), keep.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    Subgraph s{Graph(static_cast<int>(ids.size())), ids};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        s.graph.set_weight(static_cast<Vertex>(i), g.weight(ids[i]));
        for (Vertex w : g.neighbors(ids[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) s.graph.add_edge(static_cast<Vertex>(i), j);
        }
    }
    return s;
}

/// Vertices of g outside `removed`.
inline std::vector<Vertex> remaining_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

/// Closed neighbourhood N[S], sorted.
inline VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : s) {
        mark[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

// --- bipartiteness -------------------------------------------------------------------------

enum class Side : unsigned char { Left = 0, Right = 1 };
using Coloring = std::vector<Side>;

/// BFS two-colouring; components are rooted at their lowest vertex, which goes Left.
inline std::optional<Coloring> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] >= 0) continue;
        color[static_cast<std::size_t>(root)] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Coloring out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(v)] ? Side::Right : Side::Left;
    return out;
}

// --- odd cycles ----------------------------------------------------------------------------

/// A cycle of odd length >= 3, listed in traversal order.
struct OddCycle {
    std::vector<Vertex> vertices;
    int length() const noexcept { return static_cast<int>(vertices.size()); }
};

namespace detail {

// BFS on the bipartite double cover: state 2*v + parity.
inline std::vector<int> double_cover_distances(const Graph& g, Vertex v, int parity) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
    std::deque<int> queue;
    int start = 2 * v + parity;
    dist[static_cast<std::size_t>(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        int state = queue.front();
        queue.pop_front();
        Vertex u = state / 2;
        int p = state % 2;
        for (Vertex w : g.neighbors(u)) {
            int next = 2 * w + (1 - p);
            if (dist[static_cast<std::size_t>(next)] < 0) {
                dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(state)] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

}  // namespace detail

/// Shortest odd cycle (length = odd girth). Ties: lowest start vertex, then the
/// lexicographically smallest traversal from it. Returns nullopt iff g is bipartite.
inline std::optional<OddCycle> shortest_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    int best_len = -1;
    Vertex best_start = -1;
    for (Vertex s = 0; s < n; ++s) {
        if (g.degree(s) < 2) continue;
        auto dist = detail::double_cover_distances(g, s, 0);
        int d = dist[static_cast<std::size_t>(2 * s + 1)];
        if (d > 0 && (best_len < 0 || d < best_len)) {
            best_len = d;
            best_start = s;
            if (best_len == 3) break;
        }
    }
    if (best_len < 0) return std::nullopt;

    // Greedy walk: always step to the smallest neighbour that stays on a shortest odd walk.
    auto to_target = detail::double_cover_distances(g, best_start, 1);
    OddCycle cycle;
    Vertex cur = best_start;
    int parity = 0;
    for (int step = 1; step <= best_len; ++step) {
        cycle.vertices.push_back(cur);
        Vertex chosen = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (to_target[static_cast<std::size_t>(2 * w + (1 - parity))] == best_len - step) {
                chosen = w;
                break;
            }
        }
        cur = chosen;
        parity = 1 - parity;
    }
    return cycle;
}

/// Deleting `vertices` leaves the host graph bipartite.
struct OddCycleCover {
    VertexSet vertices;
    int rounds = 0;
};

/// Repeatedly removes N[C] for a shortest odd cycle C until the rest is bipartite.
inline OddCycleCover odd_cycle_cover(const Graph& g) {
    OddCycleCover cover;
    std::vector<Vertex> alive(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) alive[static_cast<std::size_t>(v)] = v;
    for (;;) {
        Subgraph sub = induced_subgraph(g, alive);
        auto cycle = shortest_odd_cycle(sub.graph);
        if (!cycle) break;
        VertexSet local = closed_neighborhood(sub.graph, cycle->vertices);
        std::vector<Vertex> next;
        std::vector<char> drop(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
        for (Vertex v : local) {
            drop[static_cast<std::size_t>(v)] = 1;
            cover.vertices.push_back(sub.original[static_cast<std::size_t>(v)]);
        }
        for (Vertex v = 0; v < sub.graph.vertex_count(); ++v)
            if (!drop[static_cast<std::size_t>(v)]) next.push_back(sub.original[static_cast<std::size_t>(v)]);
        alive = std::move(next);
        ++cover.rounds;
    }
    std::sort(cover.vertices.begin(), cover.vertices.end());
    return cover;
}

// --- subdivisions ---------------------------------------------------------------------------

/// Where a vertex of a 2-subdivision came from.
struct SubdivisionLabel {
    enum class Kind { Original, EdgePlus, EdgeMinus };
    Kind kind = Kind::Original;
    int index = 0;  // original vertex id, or edge index k into Graph::edges()
};

struct TwoSubdivision {
    Graph graph;
    std::vector<SubdivisionLabel> labels;
    std::vector<std::pair<Vertex, Vertex>> source_edges;  // e_k = (v_i, v_j), i < j
};

/// Each edge e_k = v_i v_j becomes the path v_i, v+(e_k), v-(e_k), v_j with
/// v+(e_k) = n + 2k and v-(e_k) = n + 2k + 1. New vertices get weight 1.
inline TwoSubdivision two_subdivision(const Graph& g) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    TwoSubdivision out{Graph(n + 2 * m), {}, edges};
    out.labels.resize(static_cast<std::size_t>(n + 2 * m));
    for (Vertex v = 0; v < n; ++v) {
        out.graph.set_weight(v, g.weight(v));
        out.labels[static_cast<std::size_t>(v)] = {SubdivisionLabel::Kind::Original, v};
    }
    for (int k = 0; k < m; ++k) {
        Vertex plus = n + 2 * k, minus = n + 2 * k + 1;
        out.labels[static_cast<std::size_t>(plus)] = {SubdivisionLabel::Kind::EdgePlus, k};
        out.labels[static_cast<std::size_t>(minus)] = {SubdivisionLabel::Kind::EdgeMinus, k};
        out.graph.add_edge(edges[static_cast<std::size_t>(k)].first, plus);
        out.graph.add_edge(plus, minus);
        out.graph.add_edge(minus, edges[static_cast<std::size_t>(k)].second);
    }
    return out;
}

inline Graph co_two_subdivision(const Graph& g) { return complement(two_subdivision(g).graph); }

/// Disjoint union of cycles with the given lengths, laid out consecutively.
inline Graph disjoint_cycles(std::span<const int> lengths) {
    int n = 0;
    for (int len : lengths) {
        if (len < 3) throw PreconditionError("cycle length must be at least 3");
        n += len;
    }
    Graph g(n);
    int offset = 0;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i) g.add_edge(offset + i, offset + (i + 1) % len);
        offset += len;
    }
    return g;
}

}  // namespace diskclique
