#pragma once

// Core domain types for packing/covering-with-movement on a line:
// half-open integer intervals, problem kinds, placements, and the
// exact configuration verifier.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imove {

using i64 = long long;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floored division/modulo: results of floor_mod are always in [0, b).
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i64 floor_mod(i64 a, i64 b) { return a - floor_div(a, b) * b; }

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// Half-open interval [x, x+len).
struct Interval {
    i64 x = 0;
    i64 len = 1;
    i64 y() const { return x + len; }
    bool contains_point(i64 p) const { return x <= p && p < y(); }
    bool intersects(const Interval& o) const { return x < o.y() && o.x < y(); }
};

enum class ProblemKind { Pack, Cover, Join, JPack, JCover, Tile };

inline const char* kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::Pack: return "pack";
        case ProblemKind::Cover: return "cover";
        case ProblemKind::Join: return "join";
        case ProblemKind::JPack: return "jpack";
        case ProblemKind::JCover: return "jcover";
        case ProblemKind::Tile: return "tile";
    }
    return "?";
}

inline std::optional<ProblemKind> kind_from_name(std::string_view s) {
    if (s == "pack") return ProblemKind::Pack;
    if (s == "cover") return ProblemKind::Cover;
    if (s == "join") return ProblemKind::Join;
    if (s == "jpack") return ProblemKind::JPack;
    if (s == "jcover") return ProblemKind::JCover;
    if (s == "tile") return ProblemKind::Tile;
    return std::nullopt;
}

inline constexpr ProblemKind kAllKinds[] = {
    ProblemKind::Pack,  ProblemKind::Cover,  ProblemKind::Join,
    ProblemKind::JPack, ProblemKind::JCover, ProblemKind::Tile,
};

// Target B is fixed at [0, bLen).
struct Instance {
    i64 bLen = 1;
    std::vector<Interval> intervals;

    i64 n() const { return static_cast<i64>(intervals.size()); }

    i64 total_len() const {
        i64 s = 0;
        for (const auto& iv : intervals) s += iv.len;
        return s;
    }

    std::vector<i64> distinct_lengths() const {
        std::vector<i64> ls;
        ls.reserve(intervals.size());
        for (const auto& iv : intervals) ls.push_back(iv.len);
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        return ls;
    }

    int kappa() const { return static_cast<int>(distinct_lengths().size()); }
};

struct Placement {
    std::vector<i64> finalX;  // index-aligned with Instance.intervals
};

struct MoveAnswer {
    bool feasible = true;
    i64 tauStar = 0;
    i64 sigmaStar = 0;
    std::string reason;  // set when infeasible
    std::optional<Placement> witness;

    static MoveAnswer infeasible(std::string why) {
        MoveAnswer a;
        a.feasible = false;
        a.reason = std::move(why);
        return a;
    }
    static MoveAnswer of(i64 tau, i64 n) {
        MoveAnswer a;
        a.tauStar = tau;
        a.sigmaStar = n - tau;
        return a;
    }
};

struct VerifyReport {
    i64 movedCount = 0;
    bool predicateHolds = false;
    std::vector<std::string> violations;
};

// Length preconditions from the problem definitions. Returns a reason
// string when the instance cannot satisfy the kind at all.
inline std::optional<std::string> kind_precondition_violation(const Instance& inst,
                                                              ProblemKind kind) {
    const i64 li = inst.total_len();
    switch (kind) {
        case ProblemKind::Pack:
        case ProblemKind::JPack:
            if (li > inst.bLen) return "requires total interval length <= bLen";
            break;
        case ProblemKind::Cover:
        case ProblemKind::JCover:
            if (li < inst.bLen) return "requires total interval length >= bLen";
            break;
        case ProblemKind::Tile:
            if (li != inst.bLen) return "Tile requires total interval length == bLen";
            break;
        case ProblemKind::Join:
            break;
    }
    return std::nullopt;
}

namespace detail {

inline std::vector<int> order_by_x(const std::vector<Interval>& ivs) {
    std::vector<int> ord(ivs.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](int a, int b) { return ivs[a].x < ivs[b].x; });
    return ord;
}

}  // namespace detail

// Exact verifier: endpoint sweep over integers, no epsilon anywhere.
inline VerifyReport verify(const Instance& inst, ProblemKind kind, const Placement& pl) {
    VerifyReport rep;
    const i64 n = inst.n();
    if (static_cast<i64>(pl.finalX.size()) != n)
        throw std::invalid_argument("placement size mismatch");

    std::vector<Interval> fin(inst.intervals);
    for (i64 i = 0; i < n; ++i) {
        if (pl.finalX[i] != inst.intervals[i].x) ++rep.movedCount;
        fin[i].x = pl.finalX[i];
    }

    auto ord = detail::order_by_x(fin);
    const i64 bLen = inst.bLen;
    const i64 li = inst.total_len();
    auto note = [&rep](std::string s) { rep.violations.push_back(std::move(s)); };

    auto check_disjoint = [&]() {
        for (size_t k = 1; k < ord.size(); ++k) {
            const Interval& a = fin[ord[k - 1]];
            const Interval& b = fin[ord[k]];
            if (b.x < a.y()) {
                std::ostringstream os;
                os << "intervals " << ord[k - 1] << " and " << ord[k] << " overlap at "
                   << b.x;
                note(os.str());
                return;
            }
        }
    };
    auto check_inside_b = [&]() {
        for (i64 i = 0; i < n; ++i) {
            if (fin[i].x < 0 || fin[i].y() > bLen) {
                std::ostringstream os;
                os << "interval " << i << " = [" << fin[i].x << "," << fin[i].y()
                   << ") not inside [0," << bLen << ")";
                note(os.str());
                return;
            }
        }
    };
    auto check_covers_b = [&]() {
        i64 frontier = 0;
        for (int k : ord) {
            if (frontier >= bLen) break;
            if (fin[k].x > frontier) break;
            frontier = std::max(frontier, fin[k].y());
        }
        if (frontier < bLen) {
            std::ostringstream os;
            os << "point " << frontier << " of B uncovered";
            note(os.str());
        }
    };
    // Pairwise disjoint and gap-free: one contiguous block of length li.
    auto check_joined = [&]() -> std::optional<Interval> {
        for (size_t k = 1; k < ord.size(); ++k) {
            const Interval& a = fin[ord[k - 1]];
            const Interval& b = fin[ord[k]];
            if (b.x != a.y()) {
                std::ostringstream os;
                if (b.x < a.y())
                    os << "intervals " << ord[k - 1] << " and " << ord[k] << " overlap";
                else
                    os << "gap [" << a.y() << "," << b.x << ") between intervals "
                       << ord[k - 1] << " and " << ord[k];
                note(os.str());
                return std::nullopt;
            }
        }
        return Interval{fin[ord.front()].x, li};
    };

    switch (kind) {
        case ProblemKind::Pack:
            check_disjoint();
            check_inside_b();
            break;
        case ProblemKind::Cover:
            check_covers_b();
            break;
        case ProblemKind::Join:
            check_joined();
            break;
        case ProblemKind::JPack: {
            auto blk = check_joined();
            if (blk && (blk->x < 0 || blk->y() > bLen))
                note("joined block not inside B");
            break;
        }
        case ProblemKind::JCover: {
            auto blk = check_joined();
            if (blk && (blk->x > 0 || blk->y() < bLen))
                note("joined block does not contain B");
            break;
        }
        case ProblemKind::Tile: {
            if (li != bLen) note("total interval length != bLen");
            auto blk = check_joined();
            if (blk && (blk->x != 0 || blk->y() != bLen))
                note("joined block does not coincide with B");
            break;
        }
    }
    rep.predicateHolds = rep.violations.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Instance / placement file formats.
//
// Instance file (UTF-8, LF): line 1 "n bLen"; then n lines "x_i len_i".
// Placement file: n lines, one integer finalX_i each.

namespace detail {

inline bool parse_i64(const std::string& tok, i64& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}
    // Returns false at EOF; skips blank lines.
    bool next(std::vector<std::string>& toks) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            toks.clear();
            std::istringstream ls(line);
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return true;
        }
        return false;
    }
};

[[noreturn]] inline void parse_fail(int lineno, const std::string& what) {
    std::ostringstream os;
    os << "line " << lineno << ": " << what;
    throw parse_error(os.str());
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
    detail::LineReader rd(text);
    std::vector<std::string> toks;
    if (!rd.next(toks)) throw parse_error("empty instance file");
    if (toks.size() != 2) detail::parse_fail(rd.lineno, "expected \"n bLen\"");
    i64 n = 0, bLen = 0;
    if (!detail::parse_i64(toks[0], n) || !detail::parse_i64(toks[1], bLen))
        detail::parse_fail(rd.lineno, "non-integer token");
    if (n < 1) detail::parse_fail(rd.lineno, "n must be >= 1");
    if (bLen < 1) detail::parse_fail(rd.lineno, "bLen must be >= 1");

    Instance inst;
    inst.bLen = bLen;
    inst.intervals.reserve(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i) {
        if (!rd.next(toks)) detail::parse_fail(rd.lineno + 1, "missing interval line");
        if (toks.size() != 2) detail::parse_fail(rd.lineno, "expected \"x len\"");
        i64 x = 0, len = 0;
        if (!detail::parse_i64(toks[0], x) || !detail::parse_i64(toks[1], len))
            detail::parse_fail(rd.lineno, "non-integer token");
        if (len < 1) detail::parse_fail(rd.lineno, "len must be >= 1");
        inst.intervals.push_back({x, len});
    }
    return inst;
}

inline Placement parse_placement(const std::string& text, i64 n) {
    detail::LineReader rd(text);
    std::vector<std::string> toks;
    Placement pl;
    pl.finalX.reserve(static_cast<size_t>(n));
    // Accept one value per line or whitespace-mixed.
    while (rd.next(toks)) {
        for (const auto& t : toks) {
            i64 v = 0;
            if (!detail::parse_i64(t, v)) detail::parse_fail(rd.lineno, "non-integer token");
            pl.finalX.push_back(v);
        }
    }
    if (static_cast<i64>(pl.finalX.size()) != n) {
        std::ostringstream os;
        os << "expected " << n << " positions, got " << pl.finalX.size();
        throw parse_error(os.str());
    }
    return pl;
}

inline std::string format_instance(const Instance& inst) {
    std::ostringstream os;
    os << inst.n() << ' ' << inst.bLen << '\n';
    for (const auto& iv : inst.intervals) os << iv.x << ' ' << iv.len << '\n';
    return os.str();
}

inline std::string format_placement(const Placement& pl) {
    std::ostringstream os;
    for (i64 x : pl.finalX) os << x << '\n';
    return os.str();
}

}  // namespace imove
