#pragma once

// Equal-length Cover. Any kept index chain is admissible; the budget counts
// "drops" w(i,j) = [x_i mod ell < x_j mod ell or x_i == x_j] along the chain
// and must stay within dStar = n - floor(bLen/ell).
//
// Two exact solvers share the ordering:
//  - solve_unit_cover_dp: the (drops, rank) DP, rows and diagonals in
//    lockstep, O(n * min(sigma*, tau*)), with witness backtracking;
//  - solve_unit_cover_aliens: sigma(d, n+1) is concave in d, so the maximum
//    chain length under a drop budget is recovered by a penalized sweep
//    (penalty lambda per drop, Fenwick prefix/suffix maxima over ranks) and
//    a binary search for the smallest lambda whose sweep uses <= dStar
//    drops; O(n log^2 n), no witness.

#include "unit_pack.hpp"  // DpPair, dp_advance, kInfDrops

namespace imove {

inline constexpr i64 kNegInf = std::numeric_limits<i64>::min() / 4;

namespace detail {

template <typename T>
struct MaxFenwick {
    std::vector<T> tree;
    T neutral;
    MaxFenwick(size_t n, T neutral_) : tree(n + 1, neutral_), neutral(neutral_) {}
    void update(size_t i, const T& v) {
        for (++i; i < tree.size(); i += i & (~i + 1))
            if (tree[i] < v) tree[i] = v;
    }
    T prefix_max(size_t count) const {  // over indices [0, count)
        T r = neutral;
        for (size_t i = count; i > 0; i -= i & (~i + 1))
            if (r < tree[i]) r = tree[i];
        return r;
    }
};

}  // namespace detail

struct CoverOrder {
    i64 ell = 1;
    i64 dStar = 0;
    std::vector<i64> xs;  // size n+2 with dummies -ell and bLen
    std::vector<i64> pi;  // pi_i > pi_j (i<j) iff (r_i,-x_i,i) < (r_j,-x_j,j)
};

inline CoverOrder cover_order(const NormalizedInstance& norm) {
    const i64 ell = norm.unit_len();
    const i64 n = norm.n();
    CoverOrder co;
    co.ell = ell;
    co.xs.reserve(static_cast<size_t>(n) + 2);
    co.xs.push_back(-ell);
    for (const auto& iv : norm.intervals) co.xs.push_back(iv.x);
    co.xs.push_back(norm.bLen);

    const size_t m = co.xs.size();
    std::vector<int> ord(m);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        i64 ra = floor_mod(co.xs[static_cast<size_t>(a)], ell);
        i64 rb = floor_mod(co.xs[static_cast<size_t>(b)], ell);
        if (ra != rb) return ra < rb;
        if (co.xs[static_cast<size_t>(a)] != co.xs[static_cast<size_t>(b)])
            return co.xs[static_cast<size_t>(a)] > co.xs[static_cast<size_t>(b)];
        return a < b;
    });
    co.pi.assign(m, 0);
    // Smallest key gets the largest rank.
    for (size_t r = 0; r < m; ++r)
        co.pi[static_cast<size_t>(ord[r])] = static_cast<i64>(m - 1 - r);

    co.dStar = n - floor_div(norm.bLen, ell);
    return co;
}

// ---------------------------------------------------------------------------
// Row/diagonal DP (with witness).

namespace detail {

struct CoverDp {
    const CoverOrder& co;
    i64 n;
    std::vector<std::vector<DpPair>> rows;   // rows[h][i], i in 0..n
    std::vector<std::vector<DpPair>> diags;  // diags[t][h] = dp(h, h+t)

    CoverDp(const CoverOrder& co_, i64 n_) : co(co_), n(n_) {}
    DpPair base0() const { return {0, co.pi[0]}; }

    void push_row() {
        const size_t h = rows.size();
        std::vector<DpPair> row(static_cast<size_t>(n) + 1, DpPair{kInfDrops, 0});
        if (h == 0) {
            for (auto& e : row) e = base0();
        } else {
            const auto& prev = rows[h - 1];
            for (i64 i = static_cast<i64>(h); i <= n; ++i) {
                DpPair viaKeep = dp_advance(prev[static_cast<size_t>(i) - 1],
                                            static_cast<int>(i), co.pi);
                row[static_cast<size_t>(i)] =
                    (i == static_cast<i64>(h))
                        ? viaKeep
                        : dp_min(row[static_cast<size_t>(i) - 1], viaKeep);
            }
        }
        rows.push_back(std::move(row));
    }

    DpPair diag_get(i64 h, i64 i) const {
        if (h == 0) return base0();
        if (h > i) return {kInfDrops, 0};
        return diags[static_cast<size_t>(i - h)][static_cast<size_t>(h)];
    }

    void push_diag() {
        const i64 t = static_cast<i64>(diags.size());
        std::vector<DpPair> dt(static_cast<size_t>(std::max<i64>(n - t + 1, 1)),
                               DpPair{kInfDrops, 0});
        dt[0] = base0();
        for (i64 h = 1; h <= n - t; ++h) {
            i64 i = h + t;
            // (h-1, i-1) lies on this same diagonal: read the local buffer.
            DpPair diagPrev = (h == 1) ? base0() : dt[static_cast<size_t>(h) - 1];
            DpPair viaKeep = dp_advance(diagPrev, static_cast<int>(i), co.pi);
            DpPair left = (t == 0) ? DpPair{kInfDrops, 0} : diag_get(h, i - 1);
            dt[static_cast<size_t>(h)] = dp_min(left, viaKeep);
        }
        diags.push_back(std::move(dt));
    }
};

}  // namespace detail

inline MoveAnswer solve_unit_cover_dp(const NormalizedInstance& norm) {
    if (!norm.ok) return MoveAnswer::infeasible(norm.reason);
    if (!norm.unit()) throw std::invalid_argument("solve_unit_cover_dp: kappa != 1");
    if (norm.kind != ProblemKind::Cover)
        throw std::invalid_argument("solve_unit_cover_dp: Cover expected");

    const i64 n = norm.n();
    CoverOrder co = cover_order(norm);
    detail::CoverDp dp(co, n);
    auto accept = [&](DpPair s) {
        return dp_advance(s, static_cast<int>(n) + 1, co.pi).d <= co.dStar;
    };

    i64 sigma = -1;
    bool bySigma = false;
    for (i64 r = 0;; ++r) {
        if (r <= n) {
            dp.push_row();
            if (!accept(dp.rows[static_cast<size_t>(r)][static_cast<size_t>(n)])) {
                sigma = r - 1;
                bySigma = true;
                break;
            }
            if (r == n) {
                sigma = n;
                bySigma = true;
                break;
            }
        }
        dp.push_diag();
        i64 h = n - r;
        DpPair e = (h >= 0) ? dp.diag_get(h, n) : dp.base0();
        if (accept(e)) {
            sigma = n - r;
            bySigma = false;
            break;
        }
    }

    MoveAnswer ans = MoveAnswer::of(n - sigma, n);

    auto get = [&](i64 h, i64 i) -> DpPair {
        if (h > i) return {kInfDrops, 0};
        if (bySigma) return dp.rows[static_cast<size_t>(h)][static_cast<size_t>(i)];
        return dp.diag_get(h, i);
    };
    std::vector<int> chain;
    {
        i64 h = sigma, i = n;
        while (h > 0) {
            while (i > h && get(h, i) == get(h, i - 1)) --i;
            chain.push_back(static_cast<int>(i));
            --i;
            --h;
        }
        std::reverse(chain.begin(), chain.end());
    }

    // Witness: kept intervals stay at their pre-relocation positions; each
    // uncovered chain gap is tiled from its left edge; surplus moved piles
    // at x = 0 (zero coverage cost either way).
    std::vector<char> kept(static_cast<size_t>(n) + 2, 0);
    kept[0] = kept[static_cast<size_t>(n) + 1] = 1;
    for (int c : chain) kept[static_cast<size_t>(c)] = 1;
    std::vector<i64> fx(static_cast<size_t>(n));
    for (int c : chain) fx[static_cast<size_t>(c - 1)] = norm.origX[static_cast<size_t>(c - 1)];
    std::vector<int> movedQueue;
    for (i64 k = 1; k <= n; ++k)
        if (!kept[static_cast<size_t>(k)]) movedQueue.push_back(static_cast<int>(k));

    std::vector<i64> bounds;
    bounds.push_back(0);
    for (int c : chain) bounds.push_back(c);
    bounds.push_back(n + 1);
    size_t q = 0;
    for (size_t b = 0; b + 1 < bounds.size(); ++b) {
        i64 a = bounds[b], c = bounds[b + 1];
        i64 yA = co.xs[static_cast<size_t>(a)] + co.ell;
        i64 g = co.xs[static_cast<size_t>(c)] - yA;
        if (g <= 0) continue;
        i64 need = ceil_div(g, co.ell);
        for (i64 k = 0; k < need; ++k) {
            if (q >= movedQueue.size())
                throw std::logic_error("solve_unit_cover_dp: witness fill underflow");
            fx[static_cast<size_t>(movedQueue[q] - 1)] = yA + k * co.ell;
            ++q;
        }
    }
    for (; q < movedQueue.size(); ++q) fx[static_cast<size_t>(movedQueue[q] - 1)] = 0;
    ans.witness = denormalize(norm, fx);
    return ans;
}

// ---------------------------------------------------------------------------
// sigma rows and the penalized sweep.

// values[i] = sigma(d, i): maximum h over chains 0 = s_0 < ... < s_{h+1} = i
// with at most d drops; kNegInf when no such chain exists.
struct SigmaRow {
    i64 d = 0;
    std::vector<i64> values;
};

inline SigmaRow sigma_row_first(const CoverOrder& co) {
    const size_t m = co.xs.size();
    SigmaRow row{0, std::vector<i64>(m, kNegInf)};
    detail::MaxFenwick<i64> fw(m, kNegInf);
    row.values[0] = -1;
    fw.update(static_cast<size_t>(co.pi[0]), -1);
    for (size_t i = 1; i < m; ++i) {
        i64 best = fw.prefix_max(static_cast<size_t>(co.pi[i]));
        if (best > kNegInf) row.values[i] = best + 1;
        fw.update(static_cast<size_t>(co.pi[i]), row.values[i]);
    }
    return row;
}

inline SigmaRow sigma_row_next(const CoverOrder& co, const SigmaRow& prev) {
    const size_t m = co.xs.size();
    SigmaRow row{prev.d + 1, std::vector<i64>(m, kNegInf)};
    detail::MaxFenwick<i64> cur(m, kNegInf);    // sigma(d, i) by rank
    detail::MaxFenwick<i64> prv(m, kNegInf);    // sigma(d-1, i) by reversed rank
    auto rev = [&](i64 p) { return m - 1 - static_cast<size_t>(p); };
    row.values[0] = -1;
    cur.update(static_cast<size_t>(co.pi[0]), -1);
    prv.update(rev(co.pi[0]), prev.values[0]);
    for (size_t i = 1; i < m; ++i) {
        i64 best = prev.values[i];  // same chain, unused budget
        i64 a = cur.prefix_max(static_cast<size_t>(co.pi[i]));      // ranks < pi_i
        if (a > kNegInf) best = std::max(best, a + 1);
        i64 b = prv.prefix_max(rev(co.pi[i]));                      // ranks > pi_i
        if (b > kNegInf) best = std::max(best, b + 1);
        row.values[i] = best;
        cur.update(static_cast<size_t>(co.pi[i]), row.values[i]);
        prv.update(rev(co.pi[i]), prev.values[i]);
    }
    return row;
}

// Convenience: sigma(d, .) computed by chaining rows 0..d.
inline SigmaRow sigma_row(const CoverOrder& co, i64 d) {
    SigmaRow row = sigma_row_first(co);
    for (i64 k = 1; k <= d; ++k) row = sigma_row_next(co, row);
    return row;
}

// Lexicographic maximum of (sigma_lambda(n+1), -d_lambda(n+1)) where
// sigma_lambda(i) = max over d >= 1 of sigma(d, i) - d*lambda and
// d_lambda(i) is the smallest maximizing d.
struct PenalizedState {
    i64 sigmaLam = kNegInf;
    i64 dLam = 0;
};

inline PenalizedState penalized_sweep(const CoverOrder& co, const SigmaRow& row1,
                                      i64 lambda) {
    const size_t m = co.xs.size();
    using P = std::pair<i64, i64>;  // (sigma_lambda, -d_lambda), lexicographic max
    const P neutral{kNegInf, 0};
    detail::MaxFenwick<P> asc(m, neutral);   // by rank: predecessors with smaller pi
    detail::MaxFenwick<P> desc(m, neutral);  // by reversed rank: larger pi (penalty)
    auto rev = [&](i64 p) { return m - 1 - static_cast<size_t>(p); };

    P state{row1.values[1] - lambda, -1};  // base: j = 1, d = 1
    asc.update(static_cast<size_t>(co.pi[1]), state);
    desc.update(rev(co.pi[1]), state);
    for (size_t j = 2; j < m; ++j) {
        P cand{row1.values[j] - lambda, -1};  // restart: single block, d = 1
        P a = asc.prefix_max(static_cast<size_t>(co.pi[j]));
        if (a.first > kNegInf) cand = std::max(cand, P{a.first + 1, a.second});
        P b = desc.prefix_max(rev(co.pi[j]));
        if (b.first > kNegInf) cand = std::max(cand, P{b.first + 1 - lambda, b.second - 1});
        state = cand;
        asc.update(static_cast<size_t>(co.pi[j]), state);
        desc.update(rev(co.pi[j]), state);
    }
    return {state.first, -state.second};
}

inline MoveAnswer solve_unit_cover_aliens(const NormalizedInstance& norm) {
    if (!norm.ok) return MoveAnswer::infeasible(norm.reason);
    if (!norm.unit()) throw std::invalid_argument("solve_unit_cover_aliens: kappa != 1");
    if (norm.kind != ProblemKind::Cover)
        throw std::invalid_argument("solve_unit_cover_aliens: Cover expected");

    const i64 n = norm.n();
    CoverOrder co = cover_order(norm);
    SigmaRow row0 = sigma_row_first(co);

    i64 sigma;
    if (co.dStar == 0) {
        sigma = row0.values[static_cast<size_t>(n) + 1];
        if (sigma <= kNegInf)
            throw std::logic_error("solve_unit_cover_aliens: empty zero-drop row");
    } else {
        SigmaRow row1 = sigma_row_next(co, row0);
        // Smallest lambda in [0, n] with d_lambda(n+1) <= dStar. At lambda = n
        // a single drop is never worth the penalty, so d_lambda(n+1) = 1.
        i64 lo = 0, hi = n;
        PenalizedState atHi = penalized_sweep(co, row1, hi);
        while (lo < hi) {
            i64 mid = lo + (hi - lo) / 2;
            PenalizedState ps = penalized_sweep(co, row1, mid);
            if (ps.dLam <= co.dStar) {
                hi = mid;
                atHi = ps;
            } else {
                lo = mid + 1;
            }
        }
        sigma = atHi.sigmaLam + co.dStar * hi;
    }
    return MoveAnswer::of(n - sigma, n);
}

}  // namespace imove
