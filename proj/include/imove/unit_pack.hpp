#pragma once

// Equal-length Pack: keep a maximum chain of pairwise-disjoint intervals so
// that the skipped ones fit in the leftover gaps. Feasibility of a kept
// chain reduces to counting "drops" in a permutation built from residues;
// the DP below tracks the lexicographic minimum (drops, last-rank) pair.
//
// dp(h,i): minimum (d,p) over chains 0 = s_0 < ... < s_h <= i with
// consecutive elements >= ell apart. Two searches run in lockstep: rows in
// increasing h (stops first when sigma* is small) and diagonals i-h = t in
// increasing t (stops first when tau* is small). Cost O(n * min(sigma*,tau*)).

#include "normalize.hpp"

namespace imove {

inline constexpr i64 kInfDrops = std::numeric_limits<i64>::max() / 4;

struct DpPair {
    i64 d = 0;  // drops so far; kInfDrops marks "no chain"
    i64 p = 0;  // rank of last kept element
    friend bool operator==(const DpPair&, const DpPair&) = default;
    friend bool operator<(const DpPair& a, const DpPair& b) {
        return a.d != b.d ? a.d < b.d : a.p < b.p;
    }
};

inline DpPair dp_min(DpPair a, DpPair b) { return a < b ? a : b; }

// Extend a chain by element i of rank pi[i]; a drop is a rank descent.
inline DpPair dp_advance(DpPair s, int i, const std::vector<i64>& pi) {
    if (s.d >= kInfDrops) return {kInfDrops, 0};
    if (s.p < pi[static_cast<size_t>(i)]) return {s.d, pi[static_cast<size_t>(i)]};
    return {s.d + 1, pi[static_cast<size_t>(i)]};
}

struct PackOrder {
    i64 ell = 1;
    i64 dStar = 0;
    std::vector<i64> xs;  // size n+2, dummies at front/back
    std::vector<i64> pi;  // rank by (x mod ell, index); larger residue => larger rank
    std::vector<int> l;   // l[j]: largest i with xs[j]-xs[i] >= ell, else -1
};

inline PackOrder pack_order(const NormalizedInstance& norm) {
    const i64 ell = norm.unit_len();
    const i64 n = norm.n();
    PackOrder po;
    po.ell = ell;
    po.xs.reserve(static_cast<size_t>(n) + 2);
    po.xs.push_back(-ell);
    for (const auto& iv : norm.intervals) po.xs.push_back(iv.x);
    po.xs.push_back(norm.bLen);

    const size_t m = po.xs.size();
    std::vector<int> ord(m);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        return floor_mod(po.xs[static_cast<size_t>(a)], ell) <
               floor_mod(po.xs[static_cast<size_t>(b)], ell);
    });
    po.pi.assign(m, 0);
    for (size_t r = 0; r < m; ++r) po.pi[static_cast<size_t>(ord[r])] = static_cast<i64>(r);

    po.l.assign(m, -1);
    {
        int i = -1;  // monotone: l[j] is non-decreasing in j
        for (size_t j = 0; j < m; ++j) {
            while (static_cast<size_t>(i + 1) < j &&
                   po.xs[j] - po.xs[static_cast<size_t>(i + 1)] >= ell)
                ++i;
            po.l[j] = i;
        }
    }

    po.dStar = floor_div(norm.bLen, ell) - n;
    return po;
}

namespace detail {

// Shared table accessor for both search directions.
struct PackDp {
    const PackOrder& po;
    i64 n;  // real interval count (xs has n+2 entries)

    // Row storage: rows[h][i] for i in 0..n (column n+1 never stored).
    std::vector<std::vector<DpPair>> rows;
    // Diagonal storage: diag[t][h] = dp(h, h+t) for h in 0..n-t (t=0 holds the
    // dp(i,i) base diagonal, including h=0 -> dp(0,0)).
    std::vector<std::vector<DpPair>> diags;

    explicit PackDp(const PackOrder& po_, i64 n_) : po(po_), n(n_) {}

    DpPair base0() const { return {0, po.pi[0]}; }

    bool prec(int i, int j) const {  // i "fits before" j
        return po.xs[static_cast<size_t>(j)] - po.xs[static_cast<size_t>(i)] >= po.ell;
    }

    // --- row direction -----------------------------------------------------
    void push_row() {
        const size_t h = rows.size();
        std::vector<DpPair> row(static_cast<size_t>(n) + 1, DpPair{kInfDrops, 0});
        if (h == 0) {
            for (auto& e : row) e = base0();
        } else {
            const auto& prev = rows[h - 1];
            for (i64 i = static_cast<i64>(h); i <= n; ++i) {
                DpPair viaKeep{kInfDrops, 0};
                if (i == static_cast<i64>(h)) {
                    if (prec(static_cast<int>(i) - 1, static_cast<int>(i)))
                        viaKeep = dp_advance(prev[static_cast<size_t>(i) - 1], static_cast<int>(i), po.pi);
                    row[static_cast<size_t>(i)] = viaKeep;
                } else {
                    int li = po.l[static_cast<size_t>(i)];
                    if (li >= static_cast<int>(h) - 1)
                        viaKeep = dp_advance(prev[static_cast<size_t>(li)], static_cast<int>(i), po.pi);
                    row[static_cast<size_t>(i)] = dp_min(row[static_cast<size_t>(i) - 1], viaKeep);
                }
            }
        }
        rows.push_back(std::move(row));
    }

    // --- diagonal direction ------------------------------------------------
    // dp lookup restricted to entries available in diagonal storage.
    DpPair diag_get(i64 h, i64 i) const {
        if (h == 0) return base0();
        if (h > i) return {kInfDrops, 0};
        i64 t = i - h;
        return diags[static_cast<size_t>(t)][static_cast<size_t>(h)];
    }

    void push_diag() {
        const i64 t = static_cast<i64>(diags.size());
        if (t == 0) {
            std::vector<DpPair> d0(static_cast<size_t>(n) + 1);
            d0[0] = base0();
            for (i64 i = 1; i <= n; ++i) {
                d0[static_cast<size_t>(i)] =
                    prec(static_cast<int>(i) - 1, static_cast<int>(i))
                        ? dp_advance(d0[static_cast<size_t>(i) - 1], static_cast<int>(i), po.pi)
                        : DpPair{kInfDrops, 0};
            }
            diags.push_back(std::move(d0));
            return;
        }
        std::vector<DpPair> dt(static_cast<size_t>(std::max<i64>(n - t + 1, 1)),
                               DpPair{kInfDrops, 0});
        dt[0] = base0();  // h = 0 entries are the trivial chain
        for (i64 h = 1; h <= n - t; ++h) {
            i64 i = h + t;
            DpPair left = diag_get(h, i - 1);  // diagonal t-1
            int li = po.l[static_cast<size_t>(i)];
            DpPair viaKeep{kInfDrops, 0};
            if (li >= 0 && h - 1 <= li) {
                DpPair src;
                if (h - 1 == 0)
                    src = base0();
                else if (li - (h - 1) == t)  // same diagonal, earlier h
                    src = dt[static_cast<size_t>(h) - 1];
                else
                    src = diag_get(h - 1, li);
                viaKeep = dp_advance(src, static_cast<int>(i), po.pi);
            }
            dt[static_cast<size_t>(h)] = dp_min(left, viaKeep);
        }
        diags.push_back(std::move(dt));
    }
};

}  // namespace detail

// norm.kind must be Pack; all lengths equal.
inline MoveAnswer solve_unit_pack(const NormalizedInstance& norm) {
    if (!norm.ok) return MoveAnswer::infeasible(norm.reason);
    if (!norm.unit()) throw std::invalid_argument("solve_unit_pack: kappa != 1");
    if (norm.kind != ProblemKind::Pack)
        throw std::invalid_argument("solve_unit_pack: Pack expected");

    const i64 n = norm.n();
    PackOrder po = pack_order(norm);
    const int ln1 = po.l[static_cast<size_t>(n) + 1];
    detail::PackDp dp(po, n);

    auto accept = [&](DpPair s) {
        DpPair t = dp_advance(s, static_cast<int>(n) + 1, po.pi);
        return t.d <= po.dStar;
    };
    auto rowEntry = [&](i64 h) -> DpPair {  // dp(h, ln1) from row storage
        if (ln1 < 0 || h > ln1) return {kInfDrops, 0};
        return dp.rows[static_cast<size_t>(h)][static_cast<size_t>(ln1)];
    };
    auto diagEntry = [&](i64 t) -> DpPair {  // dp(n-t, ln1) from diag storage
        i64 h = n - t;
        if (h < 0 || h > ln1) return h == 0 ? dp.base0() : DpPair{kInfDrops, 0};
        if (ln1 - h > t) return {kInfDrops, 0};  // not computed yet (can't happen)
        return dp.diag_get(h, ln1);
    };

    i64 sigma = -1;
    bool bySigma = false;
    for (i64 r = 0;; ++r) {
        // sigma side: row r.
        if (r <= n) {
            dp.push_row();
            if (!accept(rowEntry(r))) {
                sigma = r - 1;
                bySigma = true;
                break;
            }
            if (r == n) {  // every interval kept
                sigma = n;
                bySigma = true;
                break;
            }
        }
        // tau side: diagonal r.
        dp.push_diag();
        if (accept(diagEntry(r))) {
            sigma = n - r;
            bySigma = false;
            break;
        }
    }

    MoveAnswer ans = MoveAnswer::of(n - sigma, n);

    // Backtrack kept chain from whichever table finished.
    auto get = [&](i64 h, i64 i) -> DpPair {
        if (bySigma) {
            if (h > i) return {kInfDrops, 0};
            return dp.rows[static_cast<size_t>(h)][static_cast<size_t>(i)];
        }
        return dp.diag_get(h, i);
    };
    std::vector<int> chain;  // kept normalized indices + dummies excluded
    {
        i64 h = sigma;
        // Last kept element: dp(sigma, ln1) advanced to n+1.
        i64 i = ln1;
        while (h > 0) {
            while (i > h && get(h, i) == get(h, i - 1)) --i;
            chain.push_back(static_cast<int>(i));
            if (i == h) {
                i = h - 1;
            } else {
                i = po.l[static_cast<size_t>(i)];
            }
            --h;
        }
        std::reverse(chain.begin(), chain.end());
    }

    // Fill moved intervals into gaps between chain elements (xs indices are
    // normalized index + 1; dummies bound the ends).
    std::vector<char> kept(static_cast<size_t>(n) + 2, 0);
    kept[0] = kept[static_cast<size_t>(n) + 1] = 1;
    for (int c : chain) kept[static_cast<size_t>(c)] = 1;
    std::vector<i64> fx(static_cast<size_t>(n));
    for (int c : chain) fx[static_cast<size_t>(c - 1)] = po.xs[static_cast<size_t>(c)];

    std::vector<int> movedQueue;
    for (i64 k = 1; k <= n; ++k)
        if (!kept[static_cast<size_t>(k)]) movedQueue.push_back(static_cast<int>(k));
    std::vector<i64> bounds;  // chain with dummies
    bounds.push_back(0);
    for (int c : chain) bounds.push_back(c);
    bounds.push_back(n + 1);
    size_t q = 0;
    for (size_t b = 0; b + 1 < bounds.size() && q < movedQueue.size(); ++b) {
        i64 a = bounds[b], c = bounds[b + 1];
        i64 capacity = floor_div(po.xs[static_cast<size_t>(c)] - po.xs[static_cast<size_t>(a)], po.ell) - 1;
        i64 start = po.xs[static_cast<size_t>(a)] + po.ell;
        for (i64 k = 0; k < capacity && q < movedQueue.size(); ++k) {
            fx[static_cast<size_t>(movedQueue[q] - 1)] = start + k * po.ell;
            ++q;
        }
    }
    if (q != movedQueue.size())
        throw std::logic_error("solve_unit_pack: witness fill ran out of capacity");
    ans.witness = denormalize(norm, fx);
    return ans;
}

}  // namespace imove
