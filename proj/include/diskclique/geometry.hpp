#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace diskclique {

struct Point {
    Rational x{0};
    Rational y{0};
    friend bool operator==(const Point&, const Point&) = default;
};

inline Rational squared_distance(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Sign of the cross product (b - a) x (c - a): +1 counter-clockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

inline bool collinear(const Point& a, const Point& b, const Point& c) { return orientation(a, b, c) == 0; }

/// Closed disk. Radius is strictly positive.
struct Disk {
    Point center;
    Rational radius{1};

    Disk() = default;
    Disk(Point c, Rational r) : center(std::move(c)), radius(std::move(r)) {
        if (sgn(radius) <= 0) throw PreconditionError("disk radius must be positive, got " + radius.get_str());
    }
    Disk(Rational x, Rational y, Rational r) : Disk(Point{std::move(x), std::move(y)}, std::move(r)) {}

    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Closed disks: tangency counts as intersecting.
inline bool disks_intersect(const Disk& a, const Disk& b) {
    Rational reach = a.radius + b.radius;
    return squared_distance(a.center, b.center) <= reach * reach;
}

/// Interiors overlap (strict inequality).
inline bool disks_overlap_properly(const Disk& a, const Disk& b) {
    Rational reach = a.radius + b.radius;
    return squared_distance(a.center, b.center) < reach * reach;
}

struct Representation {
    std::vector<Disk> disks;
    std::vector<std::string> labels;  // empty, or one per disk

    int size() const noexcept { return static_cast<int>(disks.size()); }
    friend bool operator==(const Representation&, const Representation&) = default;
};

inline Graph intersection_graph(const Representation& rep) {
    const int n = rep.size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (disks_intersect(rep.disks[static_cast<std::size_t>(i)], rep.disks[static_cast<std::size_t>(j)]))
                g.add_edge(i, j);
    return g;
}

// --- distances between disks ---------------------------------------------------------------

namespace detail {

// Rational strictly below |d(c1,c2) - (r1+r2)|; nullopt for a tangent pair.
inline std::optional<Rational> gap_lower_bound(const Disk& a, const Disk& b) {
    Rational d2 = squared_distance(a.center, b.center);
    Rational reach = a.radius + b.radius;
    int c = cmp(d2, reach * reach);
    if (c == 0) return std::nullopt;
    for (unsigned bits = 32;; bits *= 2) {
        auto br = sqrt_bracket(d2, bits);
        Rational gap = c > 0 ? Rational(br.lower - reach) : Rational(reach - br.upper);
        if (sgn(gap) > 0) return Rational(gap * Rational(1023, 1024));
    }
}

}  // namespace detail

/// Inflates one disk of every tangent pair by eps/2, eps being (a rational under-estimate of)
/// the smallest positive distance between non-intersecting disks. Each disk is inflated at
/// most once, so a non-intersecting pair loses strictly less than its gap. Without any
/// non-intersecting pair, falls back to half the smallest negative distance, or 1.
inline Representation make_proper(const Representation& rep) {
    const int n = rep.size();
    std::vector<std::pair<int, int>> tangent;
    std::optional<Rational> positive, negative;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = rep.disks[static_cast<std::size_t>(i)];
            const auto& b = rep.disks[static_cast<std::size_t>(j)];
            auto gap = detail::gap_lower_bound(a, b);
            if (!gap) {
                tangent.emplace_back(i, j);
            } else if (disks_intersect(a, b)) {
                if (!negative || *gap < *negative) negative = *gap;
            } else {
                if (!positive || *gap < *positive) positive = *gap;
            }
        }
    }
    if (tangent.empty()) return rep;

    Rational delta = positive ? Rational(*positive / 2) : negative ? Rational(*negative / 2) : Rational(1);
    std::vector<char> inflate(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : tangent)
        if (!inflate[static_cast<std::size_t>(i)] && !inflate[static_cast<std::size_t>(j)])
            inflate[static_cast<std::size_t>(i)] = 1;

    Representation out = rep;
    for (int i = 0; i < n; ++i)
        if (inflate[static_cast<std::size_t>(i)]) out.disks[static_cast<std::size_t>(i)].radius += delta;
    return out;
}

/// First collinear triple of points, if any (coincident points count).
inline std::optional<std::array<int, 3>> find_collinear_triple(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (collinear(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)], pts[static_cast<std::size_t>(c)]))
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

inline std::vector<Point> centers(const Representation& rep) {
    std::vector<Point> out;
    out.reserve(rep.disks.size());
    for (const auto& d : rep.disks) out.push_back(d.center);
    return out;
}

/// Moves centers off every line through two other centers, separating coincident centers too.
/// eps is the smallest positive or negative distance over all pairs; each center moves at most
/// once, by less than eps/2, so no pair changes status. Candidate offsets lie on a parabola, and a line meets a parabola at most
/// twice, so the search always terminates.
inline Representation perturb_general_position(const Representation& rep) {
    const int n = rep.size();
    if (n < 3) return rep;

    std::optional<Rational> eps;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto gap = detail::gap_lower_bound(rep.disks[static_cast<std::size_t>(i)], rep.disks[static_cast<std::size_t>(j)]);
            if (!gap)
                throw PreconditionError("representation is not proper: disks " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are tangent");
            if (!eps || *gap < *eps) eps = *gap;
        }
    const Rational delta = *eps / 4;

    Representation out = rep;
    auto pts = centers(out);
    // Coincident pairs define no line; the lower index of such a pair is itself moved, since it
    // equals another center.
    auto on_some_line = [&](int v, const Point& p) {
        for (int a = 0; a < n; ++a) {
            if (a == v) continue;
            const Point& pa = pts[static_cast<std::size_t>(a)];
            if (pa == p) return true;
            for (int b = a + 1; b < n; ++b) {
                if (b == v || pts[static_cast<std::size_t>(b)] == pa) continue;
                if (collinear(pa, pts[static_cast<std::size_t>(b)], p)) return true;
            }
        }
        return false;
    };

    for (int v = 0; v < n; ++v) {
        if (!on_some_line(v, pts[static_cast<std::size_t>(v)])) continue;
        for (long k = 1;; ++k) {
            Point cand{pts[static_cast<std::size_t>(v)].x + delta / k, pts[static_cast<std::size_t>(v)].y + delta / (k * k)};
            if (!on_some_line(v, cand)) {
                pts[static_cast<std::size_t>(v)] = cand;
                out.disks[static_cast<std::size_t>(v)].center = cand;
                break;
            }
        }
    }
    return out;
}

// --- K_{2,2} test ----------------------------------------------------------------------------

inline bool line_meets_segment(const Point& l1, const Point& l2, const Point& s1, const Point& s2) {
    return orientation(l1, l2, s1) * orientation(l1, l2, s2) <= 0;
}

inline bool segments_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    return line_meets_segment(a1, a2, b1, b2) && line_meets_segment(b1, b2, a1, a2);
}

/// For non-edges c1c2 and c3c4 of a K_{2,2} disk representation: line(c1,c2) meets
/// seg(c3,c4) or line(c3,c4) meets seg(c1,c2). Inputs must be in general position.
inline bool k22_condition_holds(const Point& c1, const Point& c2, const Point& c3, const Point& c4) {
    if (c1 == c2 || c3 == c4) throw PreconditionError("k22 test: coincident segment endpoints");
    const std::array<const Point*, 4> p{&c1, &c2, &c3, &c4};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                if (collinear(*p[static_cast<std::size_t>(a)], *p[static_cast<std::size_t>(b)], *p[static_cast<std::size_t>(c)]))
                    throw PreconditionError("k22 test: points " + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                                            ", " + std::to_string(c + 1) + " are collinear");
    return line_meets_segment(c1, c2, c3, c4) || line_meets_segment(c3, c4, c1, c2);
}

// --- verification ----------------------------------------------------------------------------

struct AdjacencyMismatch {
    int u = 0;
    int v = 0;
    bool claimed_edge = false;
    Rational squared_distance{0};
    Rational squared_reach{0};  // (r_u + r_v)^2

    std::string describe() const {
        return "pair (" + std::to_string(u) + "," + std::to_string(v) + "): claimed " +
               (claimed_edge ? "edge" : "non-edge") + " but d^2 = " + squared_distance.get_str() +
               (claimed_edge ? " > " : " <= ") + "(r_u+r_v)^2 = " + squared_reach.get_str();
    }
};

struct VerifyResult {
    bool ok = true;
    std::optional<AdjacencyMismatch> mismatch;
};

inline VerifyResult verify_representation(const Representation& rep, const Graph& claimed) {
    if (rep.size() != claimed.vertex_count())
        throw PreconditionError("representation has " + std::to_string(rep.size()) + " disks but graph has " +
                                std::to_string(claimed.vertex_count()) + " vertices");
    const int n = rep.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = rep.disks[static_cast<std::size_t>(u)];
            const auto& b = rep.disks[static_cast<std::size_t>(v)];
            bool meet = disks_intersect(a, b);
            bool edge = claimed.has_edge(u, v);
            if (meet != edge) {
                Rational reach = a.radius + b.radius;
                return {false, AdjacencyMismatch{u, v, edge, squared_distance(a.center, b.center), reach * reach}};
            }
        }
    return {};
}

}  // namespace diskclique
