#pragma once

#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "graph.hpp"

namespace diskclique {

namespace detail {

// Edmonds-Karp over rational capacities. Small dense networks only.
class RationalFlowNetwork {
public:
    explicit RationalFlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    void add_arc(int from, int to, const Rational& cap) {
        arcs_.push_back({to, head_[static_cast<std::size_t>(from)], cap});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<std::size_t>(to)], Rational(0)});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    Rational max_flow(int source, int sink) {
        Rational total(0);
        const auto nodes = head_.size();
        std::vector<int> via(nodes);
        for (;;) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[static_cast<std::size_t>(source)] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const auto& arc = arcs_[static_cast<std::size_t>(a)];
                    if (sgn(arc.residual) > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(sink)] == -1) break;
            Rational push = -1;
            for (int v = sink; v != source;) {
                const auto& arc = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])];
                if (push < 0 || arc.residual < push) push = arc.residual;
                v = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to;
            }
            for (int v = sink; v != source;) {
                int a = via[static_cast<std::size_t>(v)];
                arcs_[static_cast<std::size_t>(a)].residual -= push;
                arcs_[static_cast<std::size_t>(a ^ 1)].residual += push;
                v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            total += push;
        }
        return total;
    }

    /// Nodes reachable from `source` in the residual network (after max_flow).
    std::vector<char> source_side(int source) const {
        std::vector<char> seen(head_.size(), 0);
        std::deque<int> queue{source};
        seen[static_cast<std::size_t>(source)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                const auto& arc = arcs_[static_cast<std::size_t>(a)];
                if (sgn(arc.residual) > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
                    seen[static_cast<std::size_t>(arc.to)] = 1;
                    queue.push_back(arc.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        Rational residual;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace detail

/// Maximum-weight independent set of a bipartite graph.
///
/// Min-weight vertex cover as a source/sink cut (source -> Left with the vertex weight,
/// Left -> Right uncapacitated, Right -> sink with the vertex weight); the independent set is
/// the complement of the cover. With unit weights the flow value is the maximum matching, so
/// the result has n - matching vertices (Konig).
///
/// Throws PreconditionError naming the first monochromatic edge if `coloring` is invalid.
inline VertexSet max_independent_set_bipartite(const Graph& g, const Coloring& coloring) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.size()) != n)
        throw PreconditionError("coloring has " + std::to_string(coloring.size()) + " entries for " +
                                std::to_string(n) + " vertices");
    for (auto [u, v] : g.edges())
        if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)])
            throw PreconditionError("invalid coloring: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " has both ends on one side");

    const int source = n, sink = n + 1;
    Rational infinite(1);
    for (const auto& w : g.weights()) infinite += w;

    detail::RationalFlowNetwork net(n + 2);
    for (Vertex v = 0; v < n; ++v) {
        if (coloring[static_cast<std::size_t>(v)] == Side::Left) {
            net.add_arc(source, v, g.weight(v));
            for (Vertex w : g.neighbors(v)) net.add_arc(v, w, infinite);
        } else {
            net.add_arc(v, sink, g.weight(v));
        }
    }
    net.max_flow(source, sink);
    auto reach = net.source_side(source);

    // Cover = (Left not reached) + (Right reached); independent set is the rest.
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
        bool reached = reach[static_cast<std::size_t>(v)] != 0;
        bool left = coloring[static_cast<std::size_t>(v)] == Side::Left;
        if (left == reached) out.push_back(v);
    }
    return out;
}

}  // namespace diskclique
