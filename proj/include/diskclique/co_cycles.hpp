#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace diskclique {

struct BuildPlan {
    std::vector<int> even_lengths;
    std::optional<int> odd_length;
    Rational epsilon_ratio{1, 1000};  // center gap of the two anchor disks over their radius
    Rational rotation_step{0};        // radians between stacked even gadgets; 0 picks budget / count
    Rational odd_rotation_degrees{60};
    Rational odd_scale{1, 20};
    int retry_budget = 6;

    static BuildPlan from_lengths(const std::vector<int>& lengths) {
        BuildPlan plan;
        for (int len : lengths) {
            if (len % 2 == 0) {
                plan.even_lengths.push_back(len);
            } else if (plan.odd_length) {
                throw PreconditionError("at most one odd cycle is allowed: the complement of two disjoint odd cycles "
                                        "is not a disk graph (got " +
                                        std::to_string(*plan.odd_length) + " and " + std::to_string(len) + ")");
            } else {
                plan.odd_length = len;
            }
        }
        return plan;
    }

    void validate() const {
        if (even_lengths.empty() && !odd_length) throw PreconditionError("build plan has no cycles");
        for (int len : even_lengths)
            if (len < 4 || len % 2 != 0) throw PreconditionError("even cycle length must be even and >= 4, got " + std::to_string(len));
        if (odd_length && (*odd_length < 3 || *odd_length % 2 == 0))
            throw PreconditionError("odd cycle length must be odd and >= 3, got " + std::to_string(*odd_length));
        if (sgn(epsilon_ratio) <= 0) throw PreconditionError("epsilon_ratio must be positive");
        if (sgn(odd_scale) <= 0) throw PreconditionError("odd_scale must be positive");
        if (sgn(rotation_step) < 0) throw PreconditionError("rotation_step must be non-negative");
        if (retry_budget < 1) throw PreconditionError("retry_budget must be at least 1");
    }

    std::vector<int> lengths() const {
        std::vector<int> out = even_lengths;
        if (odd_length) out.push_back(*odd_length);
        return out;
    }
};

inline Graph co_cycles_target(const BuildPlan& plan) {
    auto lengths = plan.lengths();
    return complement(disjoint_cycles(lengths));
}

namespace detail {

inline constexpr long double kRotationBudget = 0.1L;

struct Vec {
    long double x = 0, y = 0;
    Vec operator+(Vec o) const { return {x + o.x, y + o.y}; }
    Vec operator-(Vec o) const { return {x - o.x, y - o.y}; }
    Vec operator*(long double s) const { return {x * s, y * s}; }
    long double dot(Vec o) const { return x * o.x + y * o.y; }
    long double norm() const { return std::sqrt(x * x + y * y); }
    Vec unit() const { return *this * (1 / norm()); }
    Vec left() const { return {-y, x}; }
    Vec rotated(long double a) const { return {x * std::cos(a) - y * std::sin(a), x * std::sin(a) + y * std::cos(a)}; }
};

// A disk of a gadget. "Huge" disks are pinned at a tangent point `anchor` with outward
// direction `dir`: center = anchor + radius * dir. Growing the radius only adds intersections,
// since the disk stays on its side of the line through `anchor`.
struct Piece {
    Vec center;
    long double radius = 1;
    bool huge = false;
    Vec anchor;
    Vec dir;

    void grow(long double factor) {
        radius *= factor;
        center = anchor + dir * radius;
    }
};

inline Piece huge_piece(Vec anchor, Vec dir, long double radius) {
    Piece p;
    p.huge = true;
    p.anchor = anchor;
    p.dir = dir;
    p.radius = radius;
    p.center = anchor + dir * radius;
    return p;
}

struct Chain {
    long double eps, half_height;
    std::vector<Vec> points;

    Chain(long double e, int count) : eps(e), half_height(std::sqrt(4 - e * e / 4) / 2) {
        const long double lambda = 0.5L;
        for (int k = 0; k < count; ++k) {
            long double x = -e / 4 + k * e / (2 * (count - 1));
            points.push_back({x, lambda * (x * x - e * e / 16) / 2});
        }
    }

    Vec left_anchor() const { return {-eps / 2, -half_height}; }
    Vec right_anchor() const { return {eps / 2, -half_height}; }

    // Unit disk through p_k lying below the chain's tangent there.
    Vec interior_center(int k) const {
        Vec p = points[static_cast<std::size_t>(k)];
        Vec normal = Vec{-0.5L * p.x, 1}.unit();
        return p - normal;
    }

    // Upward shift of the top disk: small enough to keep every interior chain point inside.
    long double top_shift(int first, int last) const {
        long double shift = eps * eps / 64;
        Vec top{0, half_height};
        for (int k = first; k <= last; ++k) shift = std::min(shift, (1 - (points[static_cast<std::size_t>(k)] - top).norm()) / 4);
        return shift;
    }
};

// Huge disk above the outer co-tangent of unit disks centered at a and b, pulled off by a
// quarter of the smallest amount any other center pokes across the line through a and b.
inline std::optional<Piece> cotangent_piece(Vec a, Vec b, Vec dir, const std::vector<Vec>& others, long double fallback) {
    long double poke = -1;
    for (Vec c : others) {
        long double h = dir.dot(c - a);
        if (h <= 0) return std::nullopt;
        if (poke < 0 || h < poke) poke = h;
    }
    long double gap = poke < 0 ? fallback : poke / 4;
    return huge_piece((a + b) * 0.5L + dir * (1 + gap), dir, 8);
}

// D_1, E_1, O_1, E_2, ..., O_{s-1}, E_s for the complement of C_{2s}.
inline std::optional<std::vector<Piece>> even_gadget(int length, long double eps) {
    const int s = length / 2;
    Chain chain(eps, s);
    std::vector<Vec> evens;
    evens.push_back(chain.left_anchor());
    for (int k = 1; k + 1 < s; ++k) evens.push_back(chain.interior_center(k));
    evens.push_back(chain.right_anchor());

    std::vector<Piece> out;
    Piece top;
    top.center = {0, chain.half_height + chain.top_shift(1, s - 2)};
    out.push_back(top);
    for (int k = 0; k < s; ++k) {
        Piece e;
        e.center = evens[static_cast<std::size_t>(k)];
        out.push_back(e);
        if (k + 1 == s) break;
        Vec a = evens[static_cast<std::size_t>(k)], b = evens[static_cast<std::size_t>(k + 1)];
        std::vector<Vec> others;
        for (int j = 0; j < s; ++j)
            if (j != k && j != k + 1) others.push_back(evens[static_cast<std::size_t>(j)]);
        auto odd = cotangent_piece(a, b, (b - a).unit().left(), others, eps * eps / 64);
        if (!odd) return std::nullopt;
        out.push_back(*odd);
    }
    return out;
}

// D'_1, E'_1, O'_1, ..., E'_s, D'_{2s+1} for the complement of C_{2s+1}. The top disk is
// separated from the left anchor only; the closing disk sits left of the co-tangent of D'_1
// and E'_s.
inline std::optional<std::vector<Piece>> odd_gadget(int length, long double eps) {
    const int s = length / 2;
    Chain chain(eps, s + 1);
    std::vector<Vec> evens;
    evens.push_back(chain.left_anchor());
    for (int k = 1; k < s; ++k) evens.push_back(chain.interior_center(k));

    std::vector<Piece> out;
    Piece top;
    top.center = {0, chain.half_height + chain.top_shift(1, s - 1)};
    out.push_back(top);
    for (int k = 0; k < s; ++k) {
        Piece e;
        e.center = evens[static_cast<std::size_t>(k)];
        out.push_back(e);
        if (k + 1 == s) break;
        Vec a = evens[static_cast<std::size_t>(k)], b = evens[static_cast<std::size_t>(k + 1)];
        std::vector<Vec> others;
        for (int j = 0; j < s; ++j)
            if (j != k && j != k + 1) others.push_back(evens[static_cast<std::size_t>(j)]);
        auto odd = cotangent_piece(a, b, (b - a).unit().left(), others, eps * eps / 64);
        if (!odd) return std::nullopt;
        out.push_back(*odd);
    }

    Vec c1 = top.center, cs = evens.back();
    Vec dir = (cs - c1).unit().left();
    if (dir.x > 0) dir = dir * -1;
    std::vector<Vec> others(evens.begin(), evens.end() - 1);
    auto closing = cotangent_piece(c1, cs, dir, others, eps * eps / 64);
    if (!closing) return std::nullopt;
    out.push_back(*closing);
    return out;
}

inline void transform(std::vector<Piece>& pieces, long double scale, long double angle) {
    for (auto& p : pieces) {
        p.center = (p.center * scale).rotated(angle);
        p.anchor = (p.anchor * scale).rotated(angle);
        p.dir = p.dir.rotated(angle);
        p.radius *= scale;
    }
}

// Doubles huge disks until they reach every disk they must meet.
inline bool grow_huge(std::vector<Piece>& pieces, const Graph& target) {
    const int n = static_cast<int>(pieces.size());
    for (int round = 0; round < 64; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
            auto& p = pieces[static_cast<std::size_t>(u)];
            if (!p.huge) continue;
            for (Vertex v : target.neighbors(u)) {
                const auto& q = pieces[static_cast<std::size_t>(v)];
                long double reach = p.radius + q.radius;
                if ((p.center - q.center).norm() > reach * (1 - 1e-15L)) {
                    p.grow(2);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) return true;
    }
    return false;
}

}  // namespace detail

/// Disk representation of the complement of a disjoint union of cycles, of which at most one
/// is odd. Geometry is laid out in long double, rationalized, and verified exactly; on failure
/// the anchor gap is halved and the layout retried. Throws VerificationError when the retry
/// budget runs out.
inline Representation build_co_cycles_representation(const BuildPlan& plan) {
    plan.validate();
    const Graph target = co_cycles_target(plan);
    const int count = static_cast<int>(plan.even_lengths.size());
    const long double step =
        sgn(plan.rotation_step) > 0 ? to_long_double(plan.rotation_step) : detail::kRotationBudget / std::max(count, 1);
    const long double pi = std::acos(-1.0L);

    long double eps = to_long_double(plan.epsilon_ratio);
    std::string last_reason;
    for (int attempt = 1; attempt <= plan.retry_budget; ++attempt, eps /= 2) {
        std::vector<detail::Piece> pieces;
        bool ok = true;
        for (int t = 0; t < count && ok; ++t) {
            auto gadget = detail::even_gadget(plan.even_lengths[static_cast<std::size_t>(t)], eps);
            if (!gadget) {
                ok = false;
                last_reason = "even gadget chain is not convex";
                break;
            }
            detail::transform(*gadget, 1, (t - (count - 1) / 2.0L) * step);
            pieces.insert(pieces.end(), gadget->begin(), gadget->end());
        }
        if (ok && plan.odd_length) {
            auto gadget = detail::odd_gadget(*plan.odd_length, eps);
            if (!gadget) {
                ok = false;
                last_reason = "odd gadget chain is not convex";
            } else {
                detail::transform(*gadget, to_long_double(plan.odd_scale), to_long_double(plan.odd_rotation_degrees) * pi / 180);
                pieces.insert(pieces.end(), gadget->begin(), gadget->end());
            }
        }
        if (!ok) continue;
        if (!detail::grow_huge(pieces, target)) {
            last_reason = "huge disks did not reach their neighbours";
            continue;
        }

        Representation rep;
        auto lengths = plan.lengths();
        for (std::size_t c = 0; c < lengths.size(); ++c)
            for (int i = 1; i <= lengths[c]; ++i) rep.labels.push_back("c" + std::to_string(c + 1) + "." + std::to_string(i));
        for (const auto& p : pieces)
            rep.disks.emplace_back(from_long_double(p.center.x), from_long_double(p.center.y), from_long_double(p.radius));

        auto check = verify_representation(rep, target);
        if (check.ok) return rep;
        last_reason = check.mismatch->describe();
    }
    throw VerificationError("representation builder gave up after " + std::to_string(plan.retry_budget) +
                            " attempts; last failure: " + last_reason);
}

}  // namespace diskclique
