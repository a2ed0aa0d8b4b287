#pragma once

// Exhaustive reference solver for small instances. Enumerates kept subsets
// in decreasing size and checks exact completability of the moved multiset,
// so every answer comes with a witness placement.
//
// Completability per kind:
//  - Pack: every moved interval must land in a free gap inside B, so the
//    moved multiset partitions into gaps with per-gap total <= gap length.
//  - Cover: moved intervals may overlap anything; a single long interval can
//    bridge several uncovered gaps across a short kept stretch, so per-gap
//    accounting is NOT exact. We instead run a frontier placement search:
//    some optimal cover places each used interval flush at the current
//    leftmost uncovered point (shifting any cover right up to that point
//    never uncovers anything to its left).
//  - Join family: kept intervals are pairwise disjoint inside one block;
//    moved intervals fill the interior gaps with exact sums, the remainder
//    splits into a left and right end segment, and the block position
//    z = x_first - leftSum must satisfy the kind's constraint on B.

#include <array>
#include <functional>
#include <map>

#include "core.hpp"

namespace imove {

enum class FillMode { AtMost, AtLeast, Exact };

namespace detail {

struct LenCounts {
    std::vector<i64> lens;    // distinct, descending
    std::vector<int> counts;  // parallel
    i64 total = 0;

    static LenCounts of(const std::vector<i64>& items) {
        LenCounts lc;
        std::vector<i64> s(items);
        std::sort(s.rbegin(), s.rend());
        for (i64 v : s) {
            if (!lc.lens.empty() && lc.lens.back() == v) {
                ++lc.counts.back();
            } else {
                lc.lens.push_back(v);
                lc.counts.push_back(1);
            }
            lc.total += v;
        }
        return lc;
    }
};

// Enumerate per-gap count vectors satisfying `mode`, gap by gap; invokes
// `done` with the chosen counts per gap. Returns true once `done` accepts.
inline bool gap_fill_search(const std::vector<i64>& gaps, LenCounts& lc, FillMode mode,
                            size_t gapIdx, std::vector<std::vector<int>>& chosen,
                            i64 remainingCap,
                            const std::function<bool(const std::vector<std::vector<int>>&)>& done) {
    if (gapIdx == gaps.size()) {
        if (mode == FillMode::AtMost && lc.total != 0) return false;  // all items placed
        return done(chosen);
    }
    const i64 cap = gaps[gapIdx];
    if (mode == FillMode::AtMost && lc.total > remainingCap) return false;
    const i64 maxLen = lc.lens.empty() ? 0 : lc.lens.front();

    // Choose counts per distinct length for this gap.
    std::vector<int> take(lc.lens.size(), 0);
    std::function<bool(size_t, i64)> rec = [&](size_t li, i64 sum) -> bool {
        if (li == lc.lens.size()) {
            bool okGap = false;
            switch (mode) {
                case FillMode::AtMost: okGap = sum <= cap; break;
                case FillMode::Exact: okGap = sum == cap; break;
                case FillMode::AtLeast: okGap = sum >= cap; break;
            }
            if (!okGap) return false;
            chosen[gapIdx] = take;
            lc.total -= sum;
            bool r = gap_fill_search(gaps, lc, mode, gapIdx + 1, chosen,
                                     remainingCap - cap, done);
            lc.total += sum;
            return r;
        }
        const i64 len = lc.lens[li];
        const int avail = lc.counts[li];
        // Upper bound on useful count for this gap.
        i64 hi = avail;
        if (mode == FillMode::AtLeast)
            hi = std::min<i64>(hi, ceil_div(std::max<i64>(cap - sum, 0), len));
        else
            hi = std::min<i64>(hi, std::max<i64>(cap - sum, 0) / len);
        for (i64 c = 0; c <= hi; ++c) {
            // AtLeast: once the gap is satisfied, adding more of this length
            // never helps (surplus is free); stop after first satisfying count.
            take[li] = static_cast<int>(c);
            lc.counts[li] = static_cast<int>(avail - c);
            bool r = rec(li + 1, sum + c * len);
            lc.counts[li] = avail;
            if (r) return true;
            if (mode == FillMode::AtLeast && sum + c * len >= cap) break;
        }
        take[li] = 0;
        return false;
    };
    (void)maxLen;
    return rec(0, 0);
}

}  // namespace detail

// Assignment of a multiset of lengths into gaps. Returns, per gap, the
// multiset of lengths placed there (AtMost: all items used, per-gap sum
// <= gap; Exact: per-gap sum == gap, leftovers free; AtLeast: per-gap sum
// >= gap, leftovers free). Deterministic first solution or nullopt.
inline std::optional<std::vector<std::vector<i64>>> gap_fill_feasible(
    const std::vector<i64>& gaps, const std::vector<i64>& multiset, FillMode mode) {
    auto lc = detail::LenCounts::of(multiset);
    std::vector<std::vector<int>> chosen(gaps.size());
    std::optional<std::vector<std::vector<i64>>> result;
    i64 capTotal = 0;
    for (i64 g : gaps) capTotal += g;
    auto lensSnapshot = lc.lens;
    bool ok = detail::gap_fill_search(
        gaps, lc, mode, 0, chosen, capTotal,
        [&](const std::vector<std::vector<int>>& ch) {
            std::vector<std::vector<i64>> out(gaps.size());
            for (size_t g = 0; g < gaps.size(); ++g)
                for (size_t li = 0; li < lensSnapshot.size(); ++li)
                    for (int c = 0; c < ch[g][li]; ++c) out[g].push_back(lensSnapshot[li]);
            result = std::move(out);
            return true;
        });
    if (!ok) return std::nullopt;
    return result;
}

namespace detail {

// Frontier search: can `items` (multiset of lengths) cover every segment in
// `segs` (disjoint, sorted)? On success fills `placed` with (start,len).
struct CoverSearch {
    const std::vector<std::pair<i64, i64>>& segs;  // [s,e)
    LenCounts lc;
    std::vector<std::pair<i64, i64>> placed;
    std::map<std::pair<std::pair<size_t, i64>, std::vector<int>>, bool> failMemo;

    i64 uncovered_from(size_t segIdx, i64 pos) const {
        i64 tot = 0;
        for (size_t k = segIdx; k < segs.size(); ++k) {
            i64 s = (k == segIdx) ? std::max(pos, segs[k].first) : segs[k].first;
            tot += std::max<i64>(0, segs[k].second - s);
        }
        return tot;
    }

    bool run(size_t segIdx, i64 pos) {
        while (segIdx < segs.size() && pos >= segs[segIdx].second) {
            ++segIdx;
            if (segIdx < segs.size()) pos = std::max(pos, segs[segIdx].first);
        }
        if (segIdx == segs.size()) return true;
        pos = std::max(pos, segs[segIdx].first);
        if (lc.total < uncovered_from(segIdx, pos)) return false;
        auto key = std::make_pair(std::make_pair(segIdx, pos), lc.counts);
        auto it = failMemo.find(key);
        if (it != failMemo.end()) return false;
        for (size_t li = 0; li < lc.lens.size(); ++li) {
            if (lc.counts[li] == 0) continue;
            --lc.counts[li];
            lc.total -= lc.lens[li];
            placed.emplace_back(pos, lc.lens[li]);
            if (run(segIdx, pos + lc.lens[li])) return true;
            placed.pop_back();
            lc.total += lc.lens[li];
            ++lc.counts[li];
        }
        failMemo.emplace(std::move(key), true);
        return false;
    }
};

// Uncovered sub-segments of [0,bLen) given kept intervals.
inline std::vector<std::pair<i64, i64>> uncovered_segments(const Instance& inst,
                                                           const std::vector<int>& kept) {
    std::vector<std::pair<i64, i64>> covered;
    for (int k : kept) {
        i64 s = std::max<i64>(0, inst.intervals[static_cast<size_t>(k)].x);
        i64 e = std::min(inst.bLen, inst.intervals[static_cast<size_t>(k)].y());
        if (s < e) covered.emplace_back(s, e);
    }
    std::sort(covered.begin(), covered.end());
    std::vector<std::pair<i64, i64>> gaps;
    i64 pos = 0;
    for (auto [s, e] : covered) {
        if (s > pos) gaps.emplace_back(pos, s);
        pos = std::max(pos, e);
    }
    if (pos < inst.bLen) gaps.emplace_back(pos, inst.bLen);
    return gaps;
}

}  // namespace detail

// Exhaustive solver. Throws resource_error when n exceeds `bound`.
inline MoveAnswer oracle_solve(const Instance& inst, ProblemKind kind, int bound = 12) {
    if (auto why = kind_precondition_violation(inst, kind))
        return MoveAnswer::infeasible(*why);
    const int n = static_cast<int>(inst.n());
    if (n > bound) throw resource_error("oracle_solve: instance too large");
    const i64 li = inst.total_len();

    // Masks by decreasing popcount, ties by ascending mask value.
    std::vector<uint32_t> masks(static_cast<size_t>(1) << n);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });

    auto keptOf = [&](uint32_t mask) {
        std::vector<int> kept;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) kept.push_back(i);
        // sort kept by x for gap computations (stable on index)
        std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) {
            return inst.intervals[static_cast<size_t>(a)].x < inst.intervals[static_cast<size_t>(b)].x;
        });
        return kept;
    };
    auto movedOf = [&](uint32_t mask) {
        std::vector<int> mv;
        for (int i = 0; i < n; ++i)
            if (!(mask >> i & 1)) mv.push_back(i);
        return mv;
    };
    // Pick concrete moved indices for a multiset of lengths (per gap).
    auto assignIndices = [&](const std::vector<std::vector<i64>>& perGap,
                             std::vector<int> movedPool) {
        std::vector<std::vector<int>> out(perGap.size());
        for (size_t g = 0; g < perGap.size(); ++g)
            for (i64 len : perGap[g]) {
                auto it = std::find_if(movedPool.begin(), movedPool.end(), [&](int idx) {
                    return inst.intervals[static_cast<size_t>(idx)].len == len;
                });
                out[g].push_back(*it);
                movedPool.erase(it);
            }
        return out;
    };

    for (uint32_t mask : masks) {
        auto kept = keptOf(mask);
        auto moved = movedOf(mask);
        std::vector<i64> movedLens;
        for (int i : moved) movedLens.push_back(inst.intervals[static_cast<size_t>(i)].len);

        Placement pl;
        pl.finalX.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pl.finalX[static_cast<size_t>(i)] = inst.intervals[static_cast<size_t>(i)].x;

        bool ok = false;
        switch (kind) {
            case ProblemKind::Pack: {
                bool valid = true;
                i64 prev = 0;
                std::vector<i64> gaps;
                for (int k : kept) {
                    const auto& iv = inst.intervals[static_cast<size_t>(k)];
                    if (iv.x < prev || iv.y() > inst.bLen) { valid = false; break; }
                    gaps.push_back(iv.x - prev);
                    prev = iv.y();
                }
                if (!valid) break;
                gaps.push_back(inst.bLen - prev);
                auto fill = gap_fill_feasible(gaps, movedLens, FillMode::AtMost);
                if (!fill) break;
                auto idxs = assignIndices(*fill, moved);
                i64 gapStart = 0;
                size_t g = 0;
                i64 prev2 = 0;
                for (int k : kept) {
                    gapStart = prev2;
                    for (int idx : idxs[g]) {
                        pl.finalX[static_cast<size_t>(idx)] = gapStart;
                        gapStart += inst.intervals[static_cast<size_t>(idx)].len;
                    }
                    ++g;
                    prev2 = inst.intervals[static_cast<size_t>(k)].y();
                }
                gapStart = prev2;
                for (int idx : idxs[g]) {
                    pl.finalX[static_cast<size_t>(idx)] = gapStart;
                    gapStart += inst.intervals[static_cast<size_t>(idx)].len;
                }
                ok = true;
                break;
            }
            case ProblemKind::Cover: {
                auto segs = detail::uncovered_segments(inst, kept);
                detail::CoverSearch cs{segs, detail::LenCounts::of(movedLens), {}, {}};
                if (!segs.empty() && !cs.run(0, segs[0].first)) break;
                // Map placements back to concrete moved indices.
                std::vector<int> pool = moved;
                for (auto [pos, len] : cs.placed) {
                    auto it = std::find_if(pool.begin(), pool.end(), [&](int idx) {
                        return inst.intervals[static_cast<size_t>(idx)].len == len;
                    });
                    pl.finalX[static_cast<size_t>(*it)] = pos;
                    pool.erase(it);
                }
                // Unused moved intervals stay put (zero-distance moves).
                ok = true;
                break;
            }
            case ProblemKind::Join:
            case ProblemKind::JPack:
            case ProblemKind::JCover:
            case ProblemKind::Tile: {
                // Kept must be pairwise disjoint.
                bool valid = true;
                for (size_t k = 1; k < kept.size(); ++k)
                    if (inst.intervals[static_cast<size_t>(kept[k])].x <
                        inst.intervals[static_cast<size_t>(kept[k - 1])].y()) { valid = false; break; }
                if (!valid) break;

                if (kept.empty()) {
                    i64 z = 0;
                    if (kind == ProblemKind::JCover) z = inst.bLen - li;
                    i64 pos = z;
                    for (int idx : moved) {
                        pl.finalX[static_cast<size_t>(idx)] = pos;
                        pos += inst.intervals[static_cast<size_t>(idx)].len;
                    }
                    ok = true;
                    break;
                }

                const i64 xFirst = inst.intervals[static_cast<size_t>(kept.front())].x;
                const i64 yLast = inst.intervals[static_cast<size_t>(kept.back())].y();
                std::vector<i64> gaps;  // interior gaps (possibly zero-length)
                for (size_t k = 1; k < kept.size(); ++k)
                    gaps.push_back(inst.intervals[static_cast<size_t>(kept[k])].x -
                                   inst.intervals[static_cast<size_t>(kept[k - 1])].y());

                // Acceptable range for the left end-segment sum L (z = xFirst - L).
                i64 llo = 0, lhi = li;  // Join: any split
                if (kind == ProblemKind::JPack) {
                    llo = xFirst + li - inst.bLen;  // z + li <= bLen
                    lhi = xFirst;                   // z >= 0
                } else if (kind == ProblemKind::JCover) {
                    llo = xFirst;                        // z <= 0
                    lhi = xFirst + li - inst.bLen;       // z >= bLen - li
                } else if (kind == ProblemKind::Tile) {
                    llo = lhi = xFirst;  // z == 0
                }

                // Enumerate exact interior fillings; for each, test whether the
                // leftover multiset has a subset sum L in [llo, lhi].
                auto lc = detail::LenCounts::of(movedLens);
                auto lensSnapshot = lc.lens;
                std::vector<std::vector<int>> chosen(gaps.size());
                i64 capTotal = 0;
                for (i64 g : gaps) capTotal += g;
                bool found = detail::gap_fill_search(
                    gaps, lc, FillMode::Exact, 0, chosen, capTotal,
                    [&](const std::vector<std::vector<int>>& ch) {
                        // Leftover counts after the interior gap assignment.
                        std::vector<int> leftover(lensSnapshot.size(), 0);
                        {
                            auto full = detail::LenCounts::of(movedLens);
                            for (size_t li2 = 0; li2 < lensSnapshot.size(); ++li2) {
                                int used = 0;
                                for (size_t g = 0; g < ch.size(); ++g) used += ch[g][li2];
                                leftover[li2] = full.counts[li2] - used;
                            }
                        }
                        // Subset sums with one witness choice per sum.
                        std::map<i64, std::vector<int>> sums;
                        sums[0] = std::vector<int>(lensSnapshot.size(), 0);
                        for (size_t li2 = 0; li2 < lensSnapshot.size(); ++li2)
                            for (int c = 0; c < leftover[li2]; ++c) {
                                auto snapshot = sums;
                                for (const auto& [s, pick] : snapshot) {
                                    i64 ns = s + lensSnapshot[li2];
                                    if (!sums.count(ns)) {
                                        auto np = pick;
                                        ++np[li2];
                                        sums.emplace(ns, std::move(np));
                                    }
                                }
                            }
                        for (const auto& [L, pick] : sums) {
                            if (L < llo || L > lhi) continue;
                            // Build the placement.
                            std::vector<int> pool = moved;
                            auto takeLen = [&](i64 len) {
                                auto it = std::find_if(pool.begin(), pool.end(), [&](int idx) {
                                    return inst.intervals[static_cast<size_t>(idx)].len == len;
                                });
                                int v = *it;
                                pool.erase(it);
                                return v;
                            };
                            // Left segment: ends flush at xFirst.
                            i64 pos = xFirst;
                            std::vector<int> leftIdx;
                            for (size_t li2 = 0; li2 < lensSnapshot.size(); ++li2)
                                for (int c = 0; c < pick[li2]; ++c) leftIdx.push_back(takeLen(lensSnapshot[li2]));
                            for (auto it = leftIdx.rbegin(); it != leftIdx.rend(); ++it) {
                                pos -= inst.intervals[static_cast<size_t>(*it)].len;
                                pl.finalX[static_cast<size_t>(*it)] = pos;
                            }
                            // Interior gaps.
                            for (size_t g = 0; g < ch.size(); ++g) {
                                i64 gpos = inst.intervals[static_cast<size_t>(kept[g])].y();
                                for (size_t li2 = 0; li2 < lensSnapshot.size(); ++li2)
                                    for (int c = 0; c < ch[g][li2]; ++c) {
                                        int idx = takeLen(lensSnapshot[li2]);
                                        pl.finalX[static_cast<size_t>(idx)] = gpos;
                                        gpos += lensSnapshot[li2];
                                    }
                            }
                            // Right segment from yLast.
                            i64 rpos = yLast;
                            for (int idx : pool) {
                                pl.finalX[static_cast<size_t>(idx)] = rpos;
                                rpos += inst.intervals[static_cast<size_t>(idx)].len;
                            }
                            return true;
                        }
                        return false;
                    });
                ok = found;
                break;
            }
        }
        if (ok) {
            MoveAnswer a = MoveAnswer::of(n - __builtin_popcount(mask), n);
            a.witness = std::move(pl);
            return a;
        }
    }
    // Unreachable: the all-moved subset is always completable once the
    // precondition holds.
    throw std::logic_error("oracle_solve: no completable kept subset");
}

}  // namespace imove
