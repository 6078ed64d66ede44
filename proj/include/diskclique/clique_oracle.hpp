#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace diskclique {

inline constexpr int kDefaultOracleLimit = 24;

struct CliqueResult {
    VertexSet vertices;
    Rational value{0};
};

/// Exact maximum-weight clique by pivoted maximal-clique enumeration (Tomita pivoting).
/// Refuses graphs above `limit` vertices; the limit itself cannot exceed 64.
inline CliqueResult brute_force_max_clique(const Graph& g, int limit = kDefaultOracleLimit) {
    const int n = g.vertex_count();
    if (limit > 64) limit = 64;
    if (n > limit)
        throw PreconditionError("oracle refuses " + std::to_string(n) + " vertices (limit " + std::to_string(limit) + ")");

    using Mask = std::uint64_t;
    std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        nbr[static_cast<std::size_t>(u)] |= Mask{1} << v;
        nbr[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    auto weight_of = [&](Mask m) {
        Rational t(0);
        while (m) {
            int v = std::countr_zero(m);
            t += g.weight(v);
            m &= m - 1;
        }
        return t;
    };

    CliqueResult best;
    Mask best_mask = 0;
    bool have = false;

    auto recurse = [&](auto&& self, Mask r, const Rational& rw, Mask p, Mask x) -> void {
        if (p == 0) {
            if (x == 0) {
                if (!have || rw > best.value) {
                    best.value = rw;
                    best_mask = r;
                    have = true;
                }
            }
            return;
        }
        if (have && rw + weight_of(p) <= best.value) return;
        // pivot maximizing |P ∩ N(u)|
        Mask px = p | x;
        int pivot = std::countr_zero(px);
        int best_cnt = -1;
        for (Mask m = px; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int cnt = std::popcount(p & nbr[static_cast<std::size_t>(u)]);
            if (cnt > best_cnt) {
                best_cnt = cnt;
                pivot = u;
            }
        }
        for (Mask cand = p & ~nbr[static_cast<std::size_t>(pivot)]; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            Mask bit = Mask{1} << v;
            self(self, r | bit, rw + g.weight(v), p & nbr[static_cast<std::size_t>(v)], x & nbr[static_cast<std::size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    };

    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (n > 0) recurse(recurse, 0, Rational(0), all, 0);
    for (Mask m = best_mask; m; m &= m - 1) best.vertices.push_back(std::countr_zero(m));
    return best;
}

}  // namespace diskclique
