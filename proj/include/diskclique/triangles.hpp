#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace diskclique {

struct Triangle {
    Point p, q, r;

    Triangle() = default;
    Triangle(Point a, Point b, Point c) : p(std::move(a)), q(std::move(b)), r(std::move(c)) {
        if (orientation(p, q, r) == 0) throw PreconditionError("degenerate triangle");
    }

    std::array<const Point*, 3> corners() const { return {&p, &q, &r}; }
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Closed filled triangles share a point iff no edge normal of either separates them.
inline bool triangle_intersect(const Triangle& a, const Triangle& b) {
    auto separated_by = [](const Triangle& owner, const Triangle& other) {
        auto c = owner.corners();
        for (int e = 0; e < 3; ++e) {
            const Point& u = *c[static_cast<std::size_t>(e)];
            const Point& v = *c[static_cast<std::size_t>((e + 1) % 3)];
            Rational nx = v.y - u.y, ny = u.x - v.x;
            auto proj = [&](const Point& w) { return Rational(nx * w.x + ny * w.y); };
            Rational lo_a = proj(*c[0]), hi_a = lo_a;
            for (const Point* w : c) {
                Rational t = proj(*w);
                if (t < lo_a) lo_a = t;
                if (t > hi_a) hi_a = t;
            }
            auto o = other.corners();
            Rational lo_b = proj(*o[0]), hi_b = lo_b;
            for (const Point* w : o) {
                Rational t = proj(*w);
                if (t < lo_b) lo_b = t;
                if (t > hi_b) hi_b = t;
            }
            if (hi_a < lo_b || hi_b < lo_a) return true;
        }
        return false;
    };
    return !separated_by(a, b) && !separated_by(b, a);
}

inline Graph triangle_intersection_graph(const std::vector<Triangle>& ts) {
    const int n = static_cast<int>(ts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (triangle_intersect(ts[static_cast<std::size_t>(i)], ts[static_cast<std::size_t>(j)])) g.add_edge(i, j);
    return g;
}

struct TriangleGadget {
    std::vector<Triangle> vertex_triangles;  // delta_i, one per vertex
    std::vector<Triangle> edge_triangles;    // plus_1, minus_1, plus_2, minus_2, ...
    Graph target;                            // co-2-subdivision of the input
    Rational parabola_coefficient{1};
    Rational epsilon_angle{0};  // slope step: the near-horizontal sides of edge k have slope k * this

    /// Vertex triangles then edge pairs, matching the vertex order of two_subdivision.
    std::vector<Triangle> all() const {
        std::vector<Triangle> out = vertex_triangles;
        out.insert(out.end(), edge_triangles.begin(), edge_triangles.end());
        return out;
    }
};

namespace detail {

// Lines are y = slope * x + offset.
struct Line {
    Rational slope, offset;
    Rational at(const Rational& x) const { return slope * x + offset; }
};

inline Point meet(const Line& a, const Line& b) {
    Rational x = (b.offset - a.offset) / (a.slope - b.slope);
    return {x, a.at(x)};
}

inline std::vector<Triangle> lay_out_gadget(const Graph& g, const Rational& a, const Rational& mu, const Rational& far) {
    const int n = g.vertex_count();
    std::vector<Triangle> out;
    const Point apex{Rational(n + 1), Rational(0)};
    for (int i = 1; i <= n; ++i) out.emplace_back(Point{Rational(i), a * i * i}, Point{Rational(i), -a * i * i}, apex);

    const Rational z(-1, 2);
    const Rational gamma = mu / 16;
    int k = 0;
    for (auto [u, v] : g.edges()) {
        ++k;
        const int i = u + 1, j = v + 1;
        const Rational s = mu * k;
        // plus: above the chord through p_{i-1}, p_{i+1} and above a near-horizontal side
        Line chord_p{2 * a * i, -a * (i * i - 1)};
        Line flat_p{s, gamma - s * z};
        Point e = meet(flat_p, chord_p);
        out.emplace_back(e, Point{Rational(-far), flat_p.at(-far)}, Point{far, chord_p.at(far)});
        // minus: the mirror chord through q_{j-1}, q_{j+1}, and a parallel flat side below
        Line chord_q{-2 * a * j, a * (j * j - 1)};
        Line flat_q{s, -gamma - s * z};
        Point e2 = meet(flat_q, chord_q);
        out.emplace_back(e2, Point{Rational(-far), flat_q.at(-far)}, Point{far, chord_q.at(far)});
    }
    return out;
}

}  // namespace detail

struct GadgetMismatch {
    int u = 0, v = 0;
    bool claimed_edge = false;
    std::string describe() const {
        return "pair (" + std::to_string(u) + "," + std::to_string(v) + "): claimed " +
               (claimed_edge ? "edge" : "non-edge") + " but triangles " + (claimed_edge ? "are disjoint" : "intersect");
    }
};

inline std::optional<GadgetMismatch> first_mismatch(const std::vector<Triangle>& ts, const Graph& target) {
    const int n = static_cast<int>(ts.size());
    if (n != target.vertex_count()) throw PreconditionError("triangle count does not match the target graph");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet = triangle_intersect(ts[static_cast<std::size_t>(u)], ts[static_cast<std::size_t>(v)]);
            if (meet != target.has_edge(u, v)) return GadgetMismatch{u, v, target.has_edge(u, v)};
        }
    return std::nullopt;
}

/// Filled triangles realizing the co-2-subdivision of g: delta_i = p_i q_i x on the parabola
/// y = a x^2 and its mirror, and for e_k = v_i v_j the wedges plus_k (above the chord through
/// p_{i-1}, p_{i+1}) and minus_k (below the mirrored chord through q_{j-1}, q_{j+1}), cut by
/// parallel near-horizontal sides of slope k * mu. Verified exactly; on failure mu is halved,
/// a doubled and the far corners pushed out, up to `retry_budget` attempts.
inline TriangleGadget build_triangle_gadget(const Graph& g, int retry_budget = 6) {
    const int n = g.vertex_count();
    const int m = static_cast<int>(g.edge_count());
    if (m < 1) throw PreconditionError("triangle gadget needs at least one edge");

    TriangleGadget gadget;
    gadget.target = co_two_subdivision(g);
    Rational a(1);
    Rational mu = a / (4 * m);
    Rational far(8 * (n + 2) * (n + 2));
    std::string last;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        auto ts = detail::lay_out_gadget(g, a, mu, far);
        auto bad = first_mismatch(ts, gadget.target);
        if (!bad) {
            gadget.vertex_triangles.assign(ts.begin(), ts.begin() + n);
            gadget.edge_triangles.assign(ts.begin() + n, ts.end());
            gadget.parabola_coefficient = a;
            gadget.epsilon_angle = mu;
            return gadget;
        }
        last = bad->describe();
        mu /= 2;
        a *= 2;
        far *= 4;
    }
    throw VerificationError("triangle gadget failed verification after " + std::to_string(retry_budget) +
                            " attempts; last failure: " + last);
}

}  // namespace diskclique
