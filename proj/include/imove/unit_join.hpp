#pragma once

// Equal-length join family (JPack / JCover / Tile after normalization) in
// O(n log n): group intervals by x mod ell; for each admissible residue the
// kept set is a longest run of distinct in-container positions whose span
// fits inside one block. Ties: smallest residue, then leftmost block.

#include "normalize.hpp"

namespace imove {

struct FracGroup {
    i64 frac = 0;                // x mod ell, in [0, ell)
    std::vector<i64> xs;         // ascending
    std::vector<int> idx;        // normalized indices, parallel to xs
};

inline std::vector<FracGroup> frac_groups(const NormalizedInstance& norm) {
    const i64 ell = norm.unit_len();
    const i64 n = norm.n();
    std::vector<int> ord(static_cast<size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        i64 ra = floor_mod(norm.intervals[static_cast<size_t>(a)].x, ell);
        i64 rb = floor_mod(norm.intervals[static_cast<size_t>(b)].x, ell);
        if (ra != rb) return ra < rb;
        return norm.intervals[static_cast<size_t>(a)].x < norm.intervals[static_cast<size_t>(b)].x;
    });
    std::vector<FracGroup> groups;
    for (int k : ord) {
        i64 r = floor_mod(norm.intervals[static_cast<size_t>(k)].x, ell);
        if (groups.empty() || groups.back().frac != r) {
            groups.push_back({r, {}, {}});
        }
        groups.back().xs.push_back(norm.intervals[static_cast<size_t>(k)].x);
        groups.back().idx.push_back(k);
    }
    return groups;
}

// norm.kind must be JPack or JCover; all lengths equal.
inline MoveAnswer solve_unit_jfamily(const NormalizedInstance& norm) {
    if (!norm.ok) return MoveAnswer::infeasible(norm.reason);
    if (!norm.unit()) throw std::invalid_argument("solve_unit_jfamily: kappa != 1");
    const bool isCover = norm.kind == ProblemKind::JCover;
    if (!isCover && norm.kind != ProblemKind::JPack)
        throw std::invalid_argument("solve_unit_jfamily: join-family kind expected");

    const i64 ell = norm.unit_len();
    const i64 n = norm.n();
    const i64 li = n * ell;
    const i64 bLen = norm.bLen;

    // Membership container for kept intervals and residue admissibility.
    auto inContainer = [&](i64 x) {
        if (isCover) return x >= bLen - li && x + ell <= li;
        return x >= 0 && x + ell <= bLen;
    };
    auto admissible = [&](i64 r) {
        if (r == 0) return true;
        if (isCover) return r - ell >= bLen - li;  // largest z == r (mod ell), z <= 0
        return r + li <= bLen;                     // smallest z >= 0 is r itself
    };

    struct Best {
        i64 sigma = -1;
        i64 frac = 0;
        std::vector<int> kept;  // normalized indices
        i64 xLast = 0;
    } best;

    // Empty kept set is always available (sigma 0, residue 0).
    best = {0, 0, {}, 0};

    for (const auto& g : frac_groups(norm)) {
        if (!admissible(g.frac)) continue;
        // Distinct in-container positions of this residue (same residue =>
        // distinct positions are automatically pairwise disjoint).
        std::vector<i64> xs;
        std::vector<int> idx;
        for (size_t k = 0; k < g.xs.size(); ++k) {
            if (!inContainer(g.xs[k])) continue;
            if (!xs.empty() && xs.back() == g.xs[k]) continue;
            xs.push_back(g.xs[k]);
            idx.push_back(g.idx[k]);
        }
        // Two pointers: longest window with span <= li.
        size_t lo = 0;
        for (size_t hi = 0; hi < xs.size(); ++hi) {
            while (xs[hi] - xs[lo] + ell > li) ++lo;
            i64 sigma = static_cast<i64>(hi - lo + 1);
            if (sigma > best.sigma) {
                best.sigma = sigma;
                best.frac = g.frac;
                best.kept.assign(idx.begin() + static_cast<long>(lo),
                                 idx.begin() + static_cast<long>(hi) + 1);
                best.xLast = xs[hi];
            }
        }
    }

    MoveAnswer ans = MoveAnswer::of(n - best.sigma, n);

    // Witness: leftmost admissible block position containing the kept set.
    i64 z;
    if (best.kept.empty()) {
        z = isCover ? bLen - li : 0;
    } else if (isCover) {
        // Smallest z == frac (mod ell) with z >= bLen - li.
        i64 zmin = bLen - li + floor_mod(best.frac - (bLen - li), ell);
        z = std::max(zmin, best.xLast + ell - li);
    } else {
        z = std::max(best.frac, best.xLast + ell - li);
    }
    std::vector<char> keptMark(static_cast<size_t>(n), 0);
    for (int k : best.kept) keptMark[static_cast<size_t>(k)] = 1;
    std::vector<char> slotTaken(static_cast<size_t>(n), 0);
    std::vector<i64> fx(static_cast<size_t>(n));
    for (int k : best.kept) {
        fx[static_cast<size_t>(k)] = norm.intervals[static_cast<size_t>(k)].x;
        slotTaken[static_cast<size_t>((norm.intervals[static_cast<size_t>(k)].x - z) / ell)] = 1;
    }
    size_t slot = 0;
    for (i64 k = 0; k < n; ++k) {
        if (keptMark[static_cast<size_t>(k)]) continue;
        while (slotTaken[slot]) ++slot;
        fx[static_cast<size_t>(k)] = z + static_cast<i64>(slot) * ell;
        slotTaken[slot] = 1;
    }
    ans.witness = denormalize(norm, fx);
    return ans;
}

}  // namespace imove
