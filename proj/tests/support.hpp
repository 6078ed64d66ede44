#pragma once

// Independent reference implementations and instance generators for the tests. Nothing here
// calls into the algorithms it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "diskclique/diskclique.hpp"

namespace testsupport {

using namespace diskclique;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline void random_weights(std::mt19937& rng, Graph& g, int max_num = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
    for (Vertex v = 0; v < g.vertex_count(); ++v) g.set_weight(v, make_rational(num(rng), den(rng)));
}

/// Random bipartite graph with sides [0, left) and [left, n).
inline Graph random_bipartite(std::mt19937& rng, int n, int left, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < left; ++u)
        for (int v = left; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Disks with centers on a 1/8 grid in [0, span]^2 and radii in [1/4, 2].
inline Representation random_disks(std::mt19937& rng, int n, int span = 8) {
    std::uniform_int_distribution<int> coord(0, 8 * span), rad(2, 16);
    Representation rep;
    for (int i = 0; i < n; ++i) rep.disks.emplace_back(make_rational(coord(rng), 8), make_rational(coord(rng), 8), make_rational(rad(rng), 8));
    return rep;
}

/// Adjacency as bitmasks (n <= 64).
inline std::vector<std::uint64_t> masks(const Graph& g) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        out[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        out[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return out;
}

/// Maximum-weight independent set value by enumerating every subset (n <= 22).
inline Rational brute_force_mis_value(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = masks(g);
    Rational best(0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        Rational w(0);
        for (int v = 0; v < n && ok; ++v)
            if (s >> v & 1) {
                if (adj[static_cast<std::size_t>(v)] & s) ok = false;
                w += g.weight(v);
            }
        if (ok && w > best) best = w;
    }
    return best;
}

inline Rational brute_force_clique_value(const Graph& g) { return brute_force_mis_value(complement(g)); }

/// Number of independent subsets of `s` in g.
inline std::uint64_t count_independent_subsets(const Graph& g, const VertexSet& s) {
    const int k = static_cast<int>(s.size());
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                if ((m >> i & 1) && (m >> j & 1) && g.has_edge(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)])) ok = false;
        count += ok;
    }
    return count;
}

/// Length of a shortest odd cycle by DFS over simple paths (small graphs only); 0 if none.
inline int brute_force_odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, Vertex start, Vertex cur, int len) -> void {
        if (best && len >= best) return;
        for (Vertex w : g.neighbors(cur)) {
            if (w == start && len >= 3 && len % 2 == 1) {
                best = len;
                return;
            }
            if (w > start && !on_path[static_cast<std::size_t>(w)]) {
                on_path[static_cast<std::size_t>(w)] = 1;
                self(self, start, w, len + 1);
                on_path[static_cast<std::size_t>(w)] = 0;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(dfs, s, s, 1);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

/// Two-colouring check that does not use the library: try all 2^n colourings (n <= 16).
inline bool brute_force_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (((c >> u) & 1) == ((c >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return n == 0;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

inline Graph cycles(std::initializer_list<int> lengths) {
    std::vector<int> v(lengths);
    return disjoint_cycles(v);
}

/// Regular k-gon inscribed in a circle of radius r around (cx, cy), rotated by `phase`,
/// with coordinates rounded to a 1/2^20 grid.
inline std::vector<Point> regular_polygon(int k, double cx, double cy, double r, double phase) {
    std::vector<Point> out;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < k; ++i) {
        double a = phase + 2 * pi * i / k;
        auto snap = [](double x) { return make_rational(static_cast<long>(std::llround(x * (1 << 20))), 1 << 20); };
        out.push_back({snap(cx + r * std::cos(a)), snap(cy + r * std::sin(a))});
    }
    return out;
}

}  // namespace testsupport
