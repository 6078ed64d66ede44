#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace diskclique {

/// Incidence counts of one segment against every segment of the other closed polygon.
struct SegmentCounts {
    int line_hits = 0;     // a: segments of the other polygon met by this segment's line
    int crossed_by = 0;    // b: segments of the other polygon whose line meets this segment
    int intersects = 0;    // c: segments of the other polygon meeting this segment
};

/// Parity ledger for two closed polygons with odd vertex counts, plus every segment pair that
/// fails the K_{2,2} line/segment condition. Non-empty `violations` is the expected outcome:
/// the two cycles cannot both be non-edge cycles of a disk representation.
struct K22Violation {
    std::array<Point, 2> segment_a;  // first violating pair: segment of polygon 1
    std::array<Point, 2> segment_b;  // ... and of polygon 2
    int index_a = -1;
    int index_b = -1;

    std::vector<SegmentCounts> first;
    std::vector<SegmentCounts> second;
    std::vector<std::pair<int, int>> violations;  // (i, j): S_i and S'_j fail both ways

    long sum_a_first = 0, sum_b_first = 0, sum_c_first = 0;
    long sum_a_second = 0, sum_b_second = 0, sum_c_second = 0;

    /// Invariants that follow from closed curves in general position.
    bool ledger_consistent() const {
        for (const auto& s : first)
            if (s.line_hits % 2 != 0) return false;
        for (const auto& s : second)
            if (s.line_hits % 2 != 0) return false;
        return sum_c_first == sum_c_second && sum_c_first % 2 == 0 && sum_b_first == sum_a_second &&
               sum_b_second == sum_a_first;
    }
};

namespace detail {

inline void require_general_position(const std::vector<Point>& cycle1, const std::vector<Point>& cycle2) {
    std::vector<Point> all(cycle1);
    all.insert(all.end(), cycle2.begin(), cycle2.end());
    if (auto t = find_collinear_triple(all)) {
        auto name = [&](int idx) {
            int n1 = static_cast<int>(cycle1.size());
            return idx < n1 ? "cycle1[" + std::to_string(idx) + "]" : "cycle2[" + std::to_string(idx - n1) + "]";
        };
        throw PreconditionError("points not in general position: " + name((*t)[0]) + ", " + name((*t)[1]) + ", " +
                                name((*t)[2]) + " are collinear");
    }
}

}  // namespace detail

/// Counts, for every segment S_i of polygon 1 and S'_j of polygon 2, whether the line of one
/// meets the other. Both polygons must have odd length >= 3 and all points together must be in
/// general position.
inline K22Violation audit_two_odd_cycles(const std::vector<Point>& cycle1, const std::vector<Point>& cycle2) {
    for (const auto* c : {&cycle1, &cycle2}) {
        if (c->size() < 3) throw PreconditionError("cycle needs at least 3 points");
        if (c->size() % 2 == 0)
            throw PreconditionError("audit applies to odd cycles only; got length " + std::to_string(c->size()));
    }
    detail::require_general_position(cycle1, cycle2);

    const int n1 = static_cast<int>(cycle1.size());
    const int n2 = static_cast<int>(cycle2.size());
    auto seg1 = [&](int i) { return std::pair{cycle1[static_cast<std::size_t>(i)], cycle1[static_cast<std::size_t>((i + 1) % n1)]}; };
    auto seg2 = [&](int j) { return std::pair{cycle2[static_cast<std::size_t>(j)], cycle2[static_cast<std::size_t>((j + 1) % n2)]}; };

    K22Violation out;
    out.first.resize(static_cast<std::size_t>(n1));
    out.second.resize(static_cast<std::size_t>(n2));
    for (int i = 0; i < n1; ++i) {
        auto [p, q] = seg1(i);
        for (int j = 0; j < n2; ++j) {
            auto [r, s] = seg2(j);
            bool line1_hits_seg2 = line_meets_segment(p, q, r, s);
            bool line2_hits_seg1 = line_meets_segment(r, s, p, q);
            bool cross = line1_hits_seg2 && line2_hits_seg1;
            auto& a = out.first[static_cast<std::size_t>(i)];
            auto& b = out.second[static_cast<std::size_t>(j)];
            a.line_hits += line1_hits_seg2;
            a.crossed_by += line2_hits_seg1;
            a.intersects += cross;
            b.line_hits += line2_hits_seg1;
            b.crossed_by += line1_hits_seg2;
            b.intersects += cross;
            if (!line1_hits_seg2 && !line2_hits_seg1) out.violations.emplace_back(i, j);
        }
    }
    for (const auto& s : out.first) {
        out.sum_a_first += s.line_hits;
        out.sum_b_first += s.crossed_by;
        out.sum_c_first += s.intersects;
    }
    for (const auto& s : out.second) {
        out.sum_a_second += s.line_hits;
        out.sum_b_second += s.crossed_by;
        out.sum_c_second += s.intersects;
    }
    if (!out.violations.empty()) {
        auto [i, j] = out.violations.front();
        auto [p, q] = seg1(i);
        auto [r, s] = seg2(j);
        out.index_a = i;
        out.index_b = j;
        out.segment_a = {p, q};
        out.segment_b = {r, s};
    }
    return out;
}

}  // namespace diskclique
