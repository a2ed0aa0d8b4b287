#pragma once

// Instance generators: seeded random/planted instances, and the two
// hardness constructions that embed bin packing (into Tile, budgeted by
// kept count) and colored clique (into Tile, budgeted by moved count or
// by distinct-length count) — constructive direction plus witnesses.

#include <cstdint>
#include <deque>
#include <map>

#include "core.hpp"

namespace imove {

// splitmix64. Fixed constants so instances reproduce across languages:
//   gamma 0x9E3779B97F4A7C15, mix1 0xBF58476D1CE4E5B9, mix2 0x94D049BB133111EB.
struct Rng {
    std::uint64_t state = 0;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    i64 below(i64 m) {  // uniform-ish in [0, m); modulo bias is fine here
        return m <= 1 ? 0 : static_cast<i64>(next() % static_cast<std::uint64_t>(m));
    }
    i64 range(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }  // inclusive

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<size_t>(below(static_cast<i64>(i)))]);
    }
};

// Deterministic instance for (seed, params). If planted, a valid final
// configuration for `kind` is built first and `displaced` intervals
// (random count when negative) are then moved off it, so the displaced
// count is an upper bound on the optimum.
inline Instance gen_random(std::uint64_t seed, i64 n, int kappa, i64 maxCoord,
                           ProblemKind kind, bool planted, i64 displaced = -1) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    if (kappa < 1) throw std::invalid_argument("gen_random: kappa must be >= 1");
    if (kappa > n) throw std::invalid_argument("gen_random: kappa > n unrealizable");
    if (maxCoord < 1) throw std::invalid_argument("gen_random: maxCoord must be >= 1");
    if (displaced > n) throw std::invalid_argument("gen_random: displaced > n");
    Rng rng(seed);

    // kappa distinct lengths from a small pool, every pool value used.
    std::vector<i64> pool(static_cast<size_t>(kappa) + 3);
    std::iota(pool.begin(), pool.end(), 1);
    rng.shuffle(pool);
    pool.resize(static_cast<size_t>(kappa));
    std::vector<i64> lens(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i)
        lens[static_cast<size_t>(i)] =
            i < kappa ? pool[static_cast<size_t>(i)] : pool[static_cast<size_t>(rng.below(kappa))];
    rng.shuffle(lens);
    i64 total = 0;
    for (i64 l : lens) total += l;

    Instance inst;
    switch (kind) {
        case ProblemKind::Pack:
        case ProblemKind::JPack:
            inst.bLen = total + rng.below(maxCoord + 1);
            break;
        case ProblemKind::Cover:
        case ProblemKind::JCover:
            inst.bLen = 1 + rng.below(total);
            break;
        case ProblemKind::Tile:
            inst.bLen = total;
            break;
        case ProblemKind::Join:
            inst.bLen = 1 + rng.below(maxCoord);
            break;
    }

    std::vector<i64> fx(static_cast<size_t>(n));
    if (planted) {
        const i64 slack = inst.bLen - total;
        switch (kind) {
            case ProblemKind::Pack: {
                i64 pos = 0, left = slack;
                for (i64 i = 0; i < n; ++i) {
                    const i64 g = rng.below(left + 1);
                    pos += g;
                    left -= g;
                    fx[static_cast<size_t>(i)] = pos;
                    pos += lens[static_cast<size_t>(i)];
                }
                break;
            }
            case ProblemKind::Cover: {
                // Flush chain, pulled back where needed so the tail reaches bLen.
                i64 suffix = total, pos = 0;
                for (i64 i = 0; i < n; ++i) {
                    pos = std::min(pos, inst.bLen - suffix);
                    fx[static_cast<size_t>(i)] = pos;
                    pos += lens[static_cast<size_t>(i)];
                    suffix -= lens[static_cast<size_t>(i)];
                }
                break;
            }
            default: {  // contiguous block; anchor depends on kind
                i64 z = 0;
                if (kind == ProblemKind::Join) z = rng.range(-maxCoord, maxCoord);
                if (kind == ProblemKind::JPack) z = rng.below(slack + 1);
                if (kind == ProblemKind::JCover) z = (inst.bLen - total) + rng.below(total - inst.bLen + 1);
                for (i64 i = 0; i < n; ++i) {
                    fx[static_cast<size_t>(i)] = z;
                    z += lens[static_cast<size_t>(i)];
                }
                break;
            }
        }
        std::vector<i64> idx(static_cast<size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);
        const i64 k = displaced < 0 ? rng.below(n + 1) : displaced;
        for (i64 t = 0; t < k; ++t) {
            const size_t i = static_cast<size_t>(idx[static_cast<size_t>(t)]);
            i64 v = rng.range(-maxCoord, maxCoord);
            if (v == fx[i]) ++v;
            fx[i] = v;
        }
    } else {
        for (i64 i = 0; i < n; ++i) fx[static_cast<size_t>(i)] = rng.range(-maxCoord, maxCoord);
    }

    for (i64 i = 0; i < n; ++i)
        inst.intervals.push_back({fx[static_cast<size_t>(i)], lens[static_cast<size_t>(i)]});
    return inst;
}

// ---------------------------------------------------------------------------
// Hardness-reduction inputs.

struct BinPackingInstance {
    std::vector<i64> items;  // a_1..a_n, positive
    i64 binCount = 1;        // kappaHat
    i64 binLen = 1;          // b
};

inline void validate_binpack(const BinPackingInstance& bp) {
    if (bp.binCount < 1 || bp.binLen < 1)
        throw std::invalid_argument("bin packing: binCount and binLen must be >= 1");
    i64 sum = 0;
    for (i64 a : bp.items) {
        if (a < 1) throw std::invalid_argument("bin packing: item lengths must be >= 1");
        if (a > bp.binLen) throw std::invalid_argument("bin packing: item longer than bin");
        sum += a;
    }
    if (sum != bp.binCount * bp.binLen)
        throw std::invalid_argument("bin packing: item lengths must sum to binCount*binLen");
}

struct ColoredGraph {
    int vertexCount = 0;
    int numColors = 0;                     // kappaHat
    std::vector<int> colors;               // per vertex, in 0..numColors-1
    std::vector<std::pair<int, int>> edges;  // unordered, bichromatic

    bool has_edge(int u, int v) const {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }
};

inline void validate_colored_graph(const ColoredGraph& g) {
    if (g.numColors < 3) throw std::invalid_argument("colored graph: need >= 3 colors");
    if (static_cast<int>(g.colors.size()) != g.vertexCount)
        throw std::invalid_argument("colored graph: color list size mismatch");
    for (int c : g.colors)
        if (c < 0 || c >= g.numColors) throw std::invalid_argument("colored graph: color out of range");
    // adj[v][c] = v has a neighbor of color c
    std::vector<std::vector<char>> adj(static_cast<size_t>(g.vertexCount),
                                       std::vector<char>(static_cast<size_t>(g.numColors), 0));
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.vertexCount || v >= g.vertexCount)
            throw std::invalid_argument("colored graph: edge endpoint out of range");
        if (g.colors[static_cast<size_t>(u)] == g.colors[static_cast<size_t>(v)])
            throw std::invalid_argument("colored graph: edge endpoints share a color");
        adj[static_cast<size_t>(u)][static_cast<size_t>(g.colors[static_cast<size_t>(v)])] = 1;
        adj[static_cast<size_t>(v)][static_cast<size_t>(g.colors[static_cast<size_t>(u)])] = 1;
    }
    for (int v = 0; v < g.vertexCount; ++v)
        for (int c = 0; c < g.numColors; ++c)
            if (c != g.colors[static_cast<size_t>(v)] && !adj[static_cast<size_t>(v)][static_cast<size_t>(c)])
                throw std::invalid_argument("colored graph: vertex missing a neighbor of some color");
}

// Graph file: line "n m kappa"; line of n colors; m lines "u v".
inline ColoredGraph parse_colored_graph(const std::string& text) {
    detail::LineReader rd(text);
    std::vector<std::string> toks;
    if (!rd.next(toks) || toks.size() != 3) throw parse_error("expected \"n m kappa\" header");
    i64 n = 0, m = 0, kap = 0;
    if (!detail::parse_i64(toks[0], n) || !detail::parse_i64(toks[1], m) ||
        !detail::parse_i64(toks[2], kap))
        detail::parse_fail(rd.lineno, "non-integer token");
    ColoredGraph g;
    g.vertexCount = static_cast<int>(n);
    g.numColors = static_cast<int>(kap);
    std::vector<i64> vals;
    auto read_ints = [&](i64 want, const char* what) {
        vals.clear();
        while (static_cast<i64>(vals.size()) < want) {
            if (!rd.next(toks)) detail::parse_fail(rd.lineno + 1, std::string("missing ") + what);
            for (const auto& t : toks) {
                i64 v = 0;
                if (!detail::parse_i64(t, v)) detail::parse_fail(rd.lineno, "non-integer token");
                vals.push_back(v);
            }
        }
        if (static_cast<i64>(vals.size()) != want) detail::parse_fail(rd.lineno, "token count mismatch");
    };
    read_ints(n, "colors");
    for (i64 v : vals) g.colors.push_back(static_cast<int>(v));
    read_ints(2 * m, "edges");
    for (i64 e = 0; e < m; ++e)
        g.edges.emplace_back(static_cast<int>(vals[static_cast<size_t>(2 * e)]),
                             static_cast<int>(vals[static_cast<size_t>(2 * e + 1)]));
    return g;
}

// Bin packing file: line "n kappa b"; line of n item lengths.
inline BinPackingInstance parse_binpack(const std::string& text) {
    detail::LineReader rd(text);
    std::vector<std::string> toks;
    if (!rd.next(toks) || toks.size() != 3) throw parse_error("expected \"n kappa b\" header");
    i64 n = 0;
    BinPackingInstance bp;
    if (!detail::parse_i64(toks[0], n) || !detail::parse_i64(toks[1], bp.binCount) ||
        !detail::parse_i64(toks[2], bp.binLen))
        detail::parse_fail(rd.lineno, "non-integer token");
    while (static_cast<i64>(bp.items.size()) < n) {
        if (!rd.next(toks)) detail::parse_fail(rd.lineno + 1, "missing item lengths");
        for (const auto& t : toks) {
            i64 v = 0;
            if (!detail::parse_i64(t, v)) detail::parse_fail(rd.lineno, "non-integer token");
            bp.items.push_back(v);
        }
    }
    if (static_cast<i64>(bp.items.size()) != n) detail::parse_fail(rd.lineno, "token count mismatch");
    return bp;
}

// ---------------------------------------------------------------------------
// Reduction outputs. All coordinates are emitted pre-scaled by `scale`
// (clique constructions use unit-length stand-ins for the fractional
// separator pieces; the bin-packing construction needs no scaling).

struct ReductionMeta {
    i64 scale = 1;
    i64 ell = 0;   // clique base length (unscaled)
    i64 ellP = 0;  // padding/pairing length (unscaled)
    std::vector<i64> sepPos;     // scaled left endpoints of separator intervals
    std::vector<i64> vertexPos;  // scaled left endpoints of vertex intervals in B
    std::vector<i64> edgePos;
    std::vector<std::pair<i64, i64>> gap1, gap2;  // (scaled pos, scaled len)
    std::vector<std::vector<size_t>> vertexPieces, edgePieces;  // instance indices
    std::vector<size_t> blockers;  // left-anchored big intervals: vertex-length ones first
    std::vector<size_t> itemIdx;   // bin packing: item interval indices
    std::vector<i64> binPos;       // bin packing: bin left endpoints
};

struct ReductionOutput {
    Instance instance;
    ProblemKind kind = ProblemKind::Tile;
    i64 tau = 0;
    i64 sigma = 0;
    ReductionMeta meta;
};

// Bin packing -> Tile: B = kappa bins of length b each followed by a unit
// separator; items all left-anchored at 0; separators pre-placed. Budgets
// tau = n-1 (all items but one move), sigma = kappa+1.
inline ReductionOutput reduce_binpack(const BinPackingInstance& bp) {
    validate_binpack(bp);
    const i64 nh = static_cast<i64>(bp.items.size());
    ReductionOutput out;
    out.instance.bLen = bp.binCount * (bp.binLen + 1);
    for (i64 i = 0; i < nh; ++i) {
        out.meta.itemIdx.push_back(out.instance.intervals.size());
        out.instance.intervals.push_back({0, bp.items[static_cast<size_t>(i)]});
    }
    for (i64 k = 0; k < bp.binCount; ++k) {
        out.meta.binPos.push_back(k * (bp.binLen + 1));
        out.meta.sepPos.push_back(k * (bp.binLen + 1) + bp.binLen);
        out.instance.intervals.push_back({k * (bp.binLen + 1) + bp.binLen, 1});
    }
    out.tau = nh - 1;
    out.sigma = bp.binCount + 1;
    if (out.instance.total_len() != out.instance.bLen)
        throw std::logic_error("reduce_binpack: total length mismatch");
    return out;
}

// partition[k] lists the item indices of bin k; each bin must total binLen.
inline Placement witness_from_partition(const BinPackingInstance& bp,
                                        const std::vector<std::vector<int>>& partition,
                                        const ReductionOutput& out) {
    validate_binpack(bp);
    if (static_cast<i64>(partition.size()) != bp.binCount)
        throw std::invalid_argument("partition: wrong bin count");
    std::vector<char> used(bp.items.size(), 0);
    Placement pl;
    for (const auto& iv : out.instance.intervals) pl.finalX.push_back(iv.x);
    for (i64 k = 0; k < bp.binCount; ++k) {
        i64 pos = out.meta.binPos[static_cast<size_t>(k)];
        i64 sum = 0;
        for (int it : partition[static_cast<size_t>(k)]) {
            if (it < 0 || static_cast<size_t>(it) >= bp.items.size() || used[static_cast<size_t>(it)])
                throw std::invalid_argument("partition: bad or repeated item index");
            used[static_cast<size_t>(it)] = 1;
            pl.finalX[out.meta.itemIdx[static_cast<size_t>(it)]] = pos;
            pos += bp.items[static_cast<size_t>(it)];
            sum += bp.items[static_cast<size_t>(it)];
        }
        if (sum != bp.binLen) throw std::invalid_argument("partition: bin does not total binLen");
    }
    return pl;
}

namespace detail {

struct CliquePieces {
    i64 ell = 0, ellP = 0, lenV = 0, lenE = 0, tau = 0;
    std::vector<std::vector<i64>> vertexLens, edgeLens;  // unscaled piece lengths
    std::vector<i64> gap1Lens, gap2Lens;                 // unscaled
};

// Shared assembly: B = alternating separators (scale fractional pieces
// each) and vertex/edge/gap intervals; big left-anchored blockers last.
inline ReductionOutput assemble_clique(const ColoredGraph& g, const detail::CliquePieces& cp) {
    const i64 nh = g.vertexCount, mh = static_cast<i64>(g.edges.size());
    const i64 kh = g.numColors, C = kh * (kh - 1) / 2;
    const i64 S = cp.tau + 1;

    ReductionOutput out;
    out.tau = cp.tau;
    auto& meta = out.meta;
    meta.scale = S;
    meta.ell = cp.ell;
    meta.ellP = cp.ellP;
    meta.vertexPieces.resize(static_cast<size_t>(nh));
    meta.edgePieces.resize(static_cast<size_t>(mh));

    std::vector<i64> gap1 = cp.gap1Lens;
    std::sort(gap1.begin(), gap1.end());

    // item list: (category, index-within-category, unscaled length)
    enum Cat { V, E, G1, G2 };
    std::vector<std::tuple<Cat, i64, i64>> items;
    for (i64 i = 0; i < nh; ++i) items.emplace_back(V, i, cp.lenV);
    for (i64 e = 0; e < mh; ++e) items.emplace_back(E, e, cp.lenE);
    for (size_t t = 0; t < gap1.size(); ++t)
        items.emplace_back(G1, static_cast<i64>(t), gap1[t]);
    for (size_t t = 0; t < cp.gap2Lens.size(); ++t)
        items.emplace_back(G2, static_cast<i64>(t), cp.gap2Lens[t]);

    auto& ivs = out.instance.intervals;
    i64 pos = 0;
    auto emit_separator = [&]() {
        meta.sepPos.push_back(pos);
        for (i64 f = 0; f < S; ++f) ivs.push_back({pos + f, 1});
        pos += S;
    };
    for (const auto& [cat, idx, len] : items) {
        emit_separator();
        switch (cat) {
            case V:
            case E: {
                auto& posList = (cat == V) ? meta.vertexPos : meta.edgePos;
                auto& pieceList = (cat == V) ? meta.vertexPieces : meta.edgePieces;
                const auto& lens = (cat == V) ? cp.vertexLens[static_cast<size_t>(idx)]
                                              : cp.edgeLens[static_cast<size_t>(idx)];
                posList.push_back(pos);
                i64 p = pos;
                for (i64 l : lens) {
                    pieceList[static_cast<size_t>(idx)].push_back(ivs.size());
                    ivs.push_back({p, l * S});
                    p += l * S;
                }
                if (p != pos + len * S)
                    throw std::logic_error("assemble_clique: piece lengths do not tile their interval");
                pos = p;
                break;
            }
            case G1:
                meta.gap1.emplace_back(pos, len * S);
                pos += len * S;
                break;
            case G2:
                meta.gap2.emplace_back(pos, len * S);
                pos += len * S;
                break;
        }
    }
    emit_separator();
    out.instance.bLen = pos;

    for (i64 t = 0; t < kh; ++t) {
        meta.blockers.push_back(ivs.size());
        ivs.push_back({0, cp.lenV * S});
    }
    for (i64 t = 0; t < C; ++t) {
        meta.blockers.push_back(ivs.size());
        ivs.push_back({0, cp.lenE * S});
    }

    out.sigma = out.instance.n() - out.tau;
    if (out.instance.total_len() != out.instance.bLen)
        throw std::logic_error("assemble_clique: total length mismatch");
    return out;
}

}  // namespace detail

// Colored clique -> Tile, distinct-length parameter O(kappaHat^2).
// tau = 3k + 3C + 8(n-1)C with C = C(k,2); base length ell = 6k^2.
inline ReductionOutput reduce_clique_kappa(const ColoredGraph& g) {
    validate_colored_graph(g);
    const i64 nh = g.vertexCount, kh = g.numColors, C = kh * (kh - 1) / 2;
    detail::CliquePieces cp;
    cp.ell = 6 * kh * kh;
    cp.ellP = cp.ell;
    cp.tau = 3 * kh + 3 * C + 8 * (nh - 1) * C;
    cp.lenV = (2 + 2 * (nh - 1) * (kh - 1)) * cp.ell;
    cp.lenE = (2 + 4 * (nh - 1)) * cp.ell;
    auto inc = [&](i64 ci, i64 cj) { return kh * ci + cj; };
    auto col = [&](i64 ci) { return kh * kh + kh * ci + ci; };
    auto colPair = [&](i64 ci, i64 cj) { return kh * kh + kh * ci + cj; };

    for (i64 v = 0; v < nh; ++v) {
        const i64 ci = g.colors[static_cast<size_t>(v)];
        std::vector<i64> lens = {cp.ell + col(ci), cp.ell - col(ci)};
        for (i64 cj = 0; cj < kh; ++cj) {
            if (cj == ci) continue;
            for (i64 t = 0; t < v; ++t) {
                lens.push_back(cp.ell + inc(ci, cj));
                lens.push_back(cp.ell - inc(ci, cj));
            }
            for (i64 t = 0; t < 2 * (nh - 1 - v); ++t) lens.push_back(cp.ell);
        }
        cp.vertexLens.push_back(std::move(lens));
    }
    for (auto [u, v] : g.edges) {
        i64 i = u, j = v;
        if (g.colors[static_cast<size_t>(i)] > g.colors[static_cast<size_t>(j)]) std::swap(i, j);
        const i64 ci = g.colors[static_cast<size_t>(i)], cj = g.colors[static_cast<size_t>(j)];
        std::vector<i64> lens = {cp.ell + colPair(ci, cj), cp.ell - colPair(ci, cj)};
        for (i64 t = 0; t < nh - 1 - i; ++t) {
            lens.push_back(cp.ell + inc(ci, cj));
            lens.push_back(cp.ell - inc(ci, cj));
        }
        for (i64 t = 0; t < 2 * i; ++t) lens.push_back(cp.ell);
        for (i64 t = 0; t < nh - 1 - j; ++t) {
            lens.push_back(cp.ell + inc(cj, ci));
            lens.push_back(cp.ell - inc(cj, ci));
        }
        for (i64 t = 0; t < 2 * j; ++t) lens.push_back(cp.ell);
        cp.edgeLens.push_back(std::move(lens));
    }

    for (i64 ci = 0; ci < kh; ++ci) {
        cp.gap1Lens.push_back(cp.ell + col(ci));
        cp.gap1Lens.push_back(cp.ell - col(ci));
        for (i64 cj = ci + 1; cj < kh; ++cj) {
            cp.gap1Lens.push_back(cp.ell + colPair(ci, cj));
            cp.gap1Lens.push_back(cp.ell - colPair(ci, cj));
        }
    }
    std::vector<i64> incGaps;
    for (i64 ci = 0; ci < kh; ++ci)
        for (i64 cj = 0; cj < kh; ++cj) {
            if (ci == cj) continue;
            for (i64 t = 0; t < nh - 1; ++t) {
                incGaps.push_back(cp.ell + inc(ci, cj));
                incGaps.push_back(cp.ell - inc(ci, cj));
            }
        }
    std::sort(incGaps.begin(), incGaps.end());
    cp.gap2Lens = std::move(incGaps);
    for (i64 t = 0; t < 4 * (nh - 1) * C; ++t) cp.gap2Lens.push_back(cp.ell);

    if (static_cast<i64>(cp.gap1Lens.size()) != 2 * kh + 2 * C ||
        static_cast<i64>(cp.gap2Lens.size()) != 8 * (nh - 1) * C)
        throw std::logic_error("reduce_clique_kappa: gap counts off");
    return detail::assemble_clique(g, cp);
}

// Colored clique -> Tile, moved-count parameter O(kappaHat^2).
// tau = 3k + 11C; base length ell = n*k + k^2; pairing length 12*ell.
inline ReductionOutput reduce_clique_tau(const ColoredGraph& g) {
    validate_colored_graph(g);
    const i64 nh = g.vertexCount, kh = g.numColors, C = kh * (kh - 1) / 2;
    detail::CliquePieces cp;
    cp.ell = nh * kh + kh * kh;
    cp.ellP = 12 * cp.ell;
    cp.tau = 3 * kh + 3 * C + 8 * C;
    cp.lenV = 2 * 3 * cp.ell + 2 * (kh - 1) * 7 * cp.ell;
    cp.lenE = 2 * 3 * cp.ell + 4 * 5 * cp.ell;
    auto inc = [&](i64 v, i64 cj) { return kh * v + cj + 1; };  // vertex-specific
    auto col = [&](i64 ci) { return kh * ci + ci + 1; };
    auto colPair = [&](i64 ci, i64 cj) { return kh * ci + cj + 1; };

    for (i64 v = 0; v < nh; ++v) {
        const i64 ci = g.colors[static_cast<size_t>(v)];
        std::vector<i64> lens = {3 * cp.ell + col(ci), 3 * cp.ell - col(ci)};
        for (i64 cj = 0; cj < kh; ++cj) {
            if (cj == ci) continue;
            lens.push_back(7 * cp.ell + inc(v, cj));
            lens.push_back(7 * cp.ell - inc(v, cj));
        }
        cp.vertexLens.push_back(std::move(lens));
    }
    for (auto [u, v] : g.edges) {
        i64 i = u, j = v;
        if (g.colors[static_cast<size_t>(i)] > g.colors[static_cast<size_t>(j)]) std::swap(i, j);
        const i64 ci = g.colors[static_cast<size_t>(i)], cj = g.colors[static_cast<size_t>(j)];
        std::vector<i64> lens = {3 * cp.ell + colPair(ci, cj), 3 * cp.ell - colPair(ci, cj),
                                 5 * cp.ell + inc(i, cj),      5 * cp.ell - inc(i, cj),
                                 5 * cp.ell + inc(j, ci),      5 * cp.ell - inc(j, ci)};
        cp.edgeLens.push_back(std::move(lens));
    }

    for (i64 ci = 0; ci < kh; ++ci) {
        cp.gap1Lens.push_back(3 * cp.ell + col(ci));
        cp.gap1Lens.push_back(3 * cp.ell - col(ci));
        for (i64 cj = ci + 1; cj < kh; ++cj) {
            cp.gap1Lens.push_back(3 * cp.ell + colPair(ci, cj));
            cp.gap1Lens.push_back(3 * cp.ell - colPair(ci, cj));
        }
    }
    for (i64 t = 0; t < 4 * C; ++t) cp.gap2Lens.push_back(cp.ellP);

    if (static_cast<i64>(cp.gap1Lens.size()) != 2 * kh + 2 * C)
        throw std::logic_error("reduce_clique_tau: gap counts off");
    return detail::assemble_clique(g, cp);
}

enum class CliqueVariant { Kappa, Tau };

// Tiling witness from a colored clique. Blockers cover the clique's
// vertex/edge intervals; the pieces those intervals were cut into move
// out to fill the gaps — one exact-length piece per gap in the kappa
// variant, complementary pairs per pairing gap in the tau variant.
inline Placement witness_from_clique(const ColoredGraph& g, const std::vector<int>& clique,
                                     const ReductionOutput& out, CliqueVariant variant) {
    validate_colored_graph(g);
    const i64 kh = g.numColors;
    if (static_cast<i64>(clique.size()) != kh)
        throw std::invalid_argument("clique: need exactly one vertex per color");
    std::vector<i64> byColor(static_cast<size_t>(kh), -1);
    for (int v : clique) {
        if (v < 0 || v >= g.vertexCount) throw std::invalid_argument("clique: vertex out of range");
        const i64 c = g.colors[static_cast<size_t>(v)];
        if (byColor[static_cast<size_t>(c)] != -1)
            throw std::invalid_argument("clique: two vertices share a color");
        byColor[static_cast<size_t>(c)] = v;
    }
    // Edge index per color pair, lex order over (ci, cj).
    std::vector<i64> pairEdge;
    for (i64 ci = 0; ci < kh; ++ci)
        for (i64 cj = ci + 1; cj < kh; ++cj) {
            const int u = static_cast<int>(byColor[static_cast<size_t>(ci)]);
            const int v = static_cast<int>(byColor[static_cast<size_t>(cj)]);
            i64 found = -1;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                auto [a, b] = g.edges[e];
                if ((a == u && b == v) || (a == v && b == u)) found = static_cast<i64>(e);
            }
            if (found < 0) throw std::invalid_argument("clique: vertices are not pairwise adjacent");
            pairEdge.push_back(found);
        }

    const auto& meta = out.meta;
    Placement pl;
    for (const auto& iv : out.instance.intervals) pl.finalX.push_back(iv.x);

    // Blockers onto the clique's vertex and edge intervals.
    for (i64 ci = 0; ci < kh; ++ci)
        pl.finalX[meta.blockers[static_cast<size_t>(ci)]] =
            meta.vertexPos[static_cast<size_t>(byColor[static_cast<size_t>(ci)])];
    for (size_t p = 0; p < pairEdge.size(); ++p)
        pl.finalX[meta.blockers[static_cast<size_t>(kh) + p]] =
            meta.edgePos[static_cast<size_t>(pairEdge[p])];

    // Pieces of the covered intervals, keyed by (scaled) length.
    std::map<i64, std::deque<size_t>> pieces;
    for (i64 ci = 0; ci < kh; ++ci)
        for (size_t idx : meta.vertexPieces[static_cast<size_t>(byColor[static_cast<size_t>(ci)])])
            pieces[out.instance.intervals[idx].len].push_back(idx);
    for (i64 e : pairEdge)
        for (size_t idx : meta.edgePieces[static_cast<size_t>(e)])
            pieces[out.instance.intervals[idx].len].push_back(idx);

    auto take = [&](i64 len) {
        auto it = pieces.find(len);
        if (it == pieces.end() || it->second.empty())
            throw std::logic_error("witness_from_clique: no piece of required length");
        size_t idx = it->second.front();
        it->second.pop_front();
        if (it->second.empty()) pieces.erase(it);
        return idx;
    };

    for (auto [pos, len] : meta.gap1) pl.finalX[take(len)] = pos;

    if (variant == CliqueVariant::Kappa) {
        for (auto [pos, len] : meta.gap2) pl.finalX[take(len)] = pos;
    } else {
        // Each pairing gap takes a long/short complementary pair for one
        // ordered incidence of one clique edge.
        const i64 S = meta.scale, L = meta.ell;
        size_t gi = 0;
        for (size_t p = 0; p < pairEdge.size(); ++p) {
            i64 ci = 0, cj = 0, t = static_cast<i64>(p);
            for (ci = 0; ci < kh; ++ci) {
                if (t < kh - 1 - ci) {
                    cj = ci + 1 + t;
                    break;
                }
                t -= kh - 1 - ci;
            }
            const i64 i = byColor[static_cast<size_t>(ci)], j = byColor[static_cast<size_t>(cj)];
            const i64 dij = kh * i + cj + 1, dji = kh * j + ci + 1;
            const std::pair<i64, i64> combos[4] = {{7 * L + dij, 5 * L - dij},
                                                   {7 * L - dij, 5 * L + dij},
                                                   {7 * L + dji, 5 * L - dji},
                                                   {7 * L - dji, 5 * L + dji}};
            for (const auto& [la, lb] : combos) {
                auto [pos, len] = meta.gap2[gi++];
                if ((la + lb) * S != len)
                    throw std::logic_error("witness_from_clique: pair does not fill pairing gap");
                pl.finalX[take(la * S)] = pos;
                pl.finalX[take(lb * S)] = pos + la * S;
            }
        }
    }
    if (!pieces.empty()) throw std::logic_error("witness_from_clique: leftover pieces");
    return pl;
}

}  // namespace imove
