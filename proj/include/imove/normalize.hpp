#pragma once

// Instance normalization shared by the exact solvers:
//  - feasibility preconditions (length vs bLen per kind),
//  - Join is rewritten as JPack against a target padded by the total
//    interval length on both sides (every block position stays reachable),
//  - Tile is rewritten as JPack (equivalent once total length == bLen),
//  - for Pack/Cover, intervals disjoint from B are relocated to the dummy
//    slots hugging B ([-len,0) / [bLen,bLen+len)); this never changes the
//    answer and lets the line solvers assume x_0 <= x_i <= x_{n+1},
//  - intervals are sorted by x (stable on input index).
//
// Relocation is deliberately *not* applied for the join family: a JCover
// block may extend beyond B, so an interval left untouched outside B can
// legitimately be kept there.

#include "core.hpp"

namespace imove {

struct NormalizedInstance {
    bool ok = true;
    std::string reason;
    ProblemKind kind = ProblemKind::Pack;  // Join/Tile already mapped to JPack
    i64 bLen = 1;
    i64 shift = 0;  // normalized x = original x + shift
    std::vector<Interval> intervals;  // sorted by (x, input index)
    std::vector<int> orig;            // normalized idx -> input idx
    std::vector<i64> origX;           // pre-relocation x, in normalized frame
    std::vector<char> relocated;

    i64 n() const { return static_cast<i64>(intervals.size()); }
    i64 unit_len() const { return intervals.empty() ? 1 : intervals[0].len; }
    bool unit() const {
        for (const auto& iv : intervals)
            if (iv.len != intervals[0].len) return false;
        return true;
    }
};

inline NormalizedInstance normalize(const Instance& inst, ProblemKind kind) {
    NormalizedInstance norm;
    if (auto why = kind_precondition_violation(inst, kind)) {
        norm.ok = false;
        norm.reason = *why;
        return norm;
    }
    const i64 n = inst.n();
    const i64 li = inst.total_len();
    norm.kind = kind;
    norm.bLen = inst.bLen;
    norm.intervals = inst.intervals;

    if (kind == ProblemKind::Join) {
        // Pad: B' = [minX - li, maxY + li), then anchor B' at 0.
        i64 minX = inst.intervals[0].x, maxY = inst.intervals[0].y();
        for (const auto& iv : inst.intervals) {
            minX = std::min(minX, iv.x);
            maxY = std::max(maxY, iv.y());
        }
        norm.kind = ProblemKind::JPack;
        norm.shift = -(minX - li);
        norm.bLen = (maxY + li) - (minX - li);
        for (auto& iv : norm.intervals) iv.x += norm.shift;
    } else if (kind == ProblemKind::Tile) {
        norm.kind = ProblemKind::JPack;  // li == bLen enforced above
    }

    norm.origX.resize(static_cast<size_t>(n));
    norm.relocated.assign(static_cast<size_t>(n), 0);
    for (i64 i = 0; i < n; ++i) norm.origX[static_cast<size_t>(i)] = norm.intervals[static_cast<size_t>(i)].x;

    if (kind == ProblemKind::Pack || kind == ProblemKind::Cover) {
        for (i64 i = 0; i < n; ++i) {
            auto& iv = norm.intervals[static_cast<size_t>(i)];
            if (iv.y() <= 0) {
                iv.x = -iv.len;
                norm.relocated[static_cast<size_t>(i)] = 1;
            } else if (iv.x >= norm.bLen) {
                iv.x = norm.bLen;
                norm.relocated[static_cast<size_t>(i)] = 1;
            }
        }
    }

    // Stable sort by x, remembering input indices.
    std::vector<int> ord(static_cast<size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        return norm.intervals[static_cast<size_t>(a)].x < norm.intervals[static_cast<size_t>(b)].x;
    });
    std::vector<Interval> sortedIvs;
    std::vector<i64> sortedOrigX;
    std::vector<char> sortedReloc;
    sortedIvs.reserve(ord.size());
    sortedOrigX.reserve(ord.size());
    sortedReloc.reserve(ord.size());
    for (int k : ord) {
        sortedIvs.push_back(norm.intervals[static_cast<size_t>(k)]);
        sortedOrigX.push_back(norm.origX[static_cast<size_t>(k)]);
        sortedReloc.push_back(norm.relocated[static_cast<size_t>(k)]);
    }
    norm.intervals = std::move(sortedIvs);
    norm.origX = std::move(sortedOrigX);
    norm.relocated = std::move(sortedReloc);
    norm.orig = std::move(ord);
    return norm;
}

// Map normalized-frame final positions back to input order and frame.
inline Placement denormalize(const NormalizedInstance& norm, const std::vector<i64>& fx) {
    Placement pl;
    pl.finalX.assign(fx.size(), 0);
    for (size_t k = 0; k < fx.size(); ++k)
        pl.finalX[static_cast<size_t>(norm.orig[k])] = fx[k] - norm.shift;
    return pl;
}

}  // namespace imove
