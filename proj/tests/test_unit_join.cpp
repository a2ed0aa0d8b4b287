#include <catch2/catch_amalgamated.hpp>

#include "imove/generators.hpp"
#include "imove/oracle.hpp"
#include "imove/unit_join.hpp"

using namespace imove;

namespace {
MoveAnswer run(i64 bLen, std::vector<Interval> ivs, ProblemKind kind) {
    Instance inst{bLen, std::move(ivs)};
    auto norm = normalize(inst, kind);
    REQUIRE(norm.ok);
    return solve_unit_jfamily(norm);
}
}  // namespace

TEST_CASE("contest sample: six shields of length two") {
    Instance inst{13, {{-1, 2}, {3, 2}, {4, 2}, {5, 2}, {12, 2}, {11, 2}}};
    auto norm = normalize(inst, ProblemKind::JPack);
    REQUIRE(norm.ok);
    MoveAnswer a = solve_unit_jfamily(norm);
    CHECK(a.tauStar == 3);
    CHECK(a.sigmaStar == 3);
    REQUIRE(a.witness.has_value());
    auto rep = verify(inst, ProblemKind::JPack, *a.witness);
    CHECK(rep.predicateHolds);
    CHECK(rep.movedCount <= 3);
}

TEST_CASE("small fixed join-family answers") {
    CHECK(run(100, {{10, 2}, {13, 2}}, ProblemKind::Join).tauStar == 1);
    CHECK(run(4, {{0, 2}, {1, 2}}, ProblemKind::JPack).tauStar == 1);
    CHECK(run(4, {{-1, 3}, {6, 3}}, ProblemKind::JCover).tauStar == 1);
    CHECK(run(6, {{0, 2}, {2, 2}, {5, 2}}, ProblemKind::Tile).tauStar == 1);
    CHECK(run(2, {{0, 1}, {5, 1}}, ProblemKind::Tile).tauStar == 1);
    CHECK(run(1, {{0, 1}}, ProblemKind::JPack).tauStar == 0);
}

TEST_CASE("kept intervals share a residue and are disjoint") {
    Rng rng(31);
    for (int it = 0; it < 200; ++it) {
        const i64 n = 1 + rng.below(8);
        const i64 len = 1 + rng.below(4);
        Instance inst;
        for (i64 i = 0; i < n; ++i) inst.intervals.push_back({rng.range(-12, 24), len});
        inst.bLen = inst.total_len() + rng.below(8);
        auto norm = normalize(inst, ProblemKind::JPack);
        REQUIRE(norm.ok);
        MoveAnswer a = solve_unit_jfamily(norm);
        REQUIRE(a.witness.has_value());
        // kept = intervals with finalX == x; they must agree mod len and be disjoint
        std::vector<i64> kept;
        for (i64 i = 0; i < n; ++i)
            if (a.witness->finalX[static_cast<size_t>(i)] == inst.intervals[static_cast<size_t>(i)].x)
                kept.push_back(inst.intervals[static_cast<size_t>(i)].x);
        std::sort(kept.begin(), kept.end());
        for (size_t k = 1; k < kept.size(); ++k) {
            CHECK(floor_mod(kept[k], len) == floor_mod(kept[0], len));
            CHECK(kept[k] - kept[k - 1] >= len);
        }
    }
}

TEST_CASE("join family agrees with the exhaustive search") {
    Rng rng(4242);
    const ProblemKind kinds[] = {ProblemKind::Join, ProblemKind::JPack, ProblemKind::JCover,
                                 ProblemKind::Tile};
    for (int it = 0; it < 150; ++it) {
        for (ProblemKind kind : kinds) {
            const i64 n = 1 + rng.below(8);
            const i64 len = 1 + rng.below(4);
            Instance inst;
            for (i64 i = 0; i < n; ++i) inst.intervals.push_back({rng.range(-12, 24), len});
            const i64 tot = n * len;
            switch (kind) {
                case ProblemKind::JPack: inst.bLen = tot + rng.below(8); break;
                case ProblemKind::JCover: inst.bLen = 1 + rng.below(tot); break;
                case ProblemKind::Tile: inst.bLen = tot; break;
                default: inst.bLen = 1 + rng.below(20); break;
            }
            MoveAnswer expect = oracle_solve(inst, kind);
            auto norm = normalize(inst, kind);
            REQUIRE(norm.ok);
            MoveAnswer got = solve_unit_jfamily(norm);
            INFO(kind_name(kind) << "\n" << format_instance(inst));
            CHECK(got.tauStar == expect.tauStar);
            REQUIRE(got.witness.has_value());
            auto rep = verify(inst, kind, *got.witness);
            CHECK(rep.predicateHolds);
            CHECK(rep.movedCount <= got.tauStar);
        }
    }
}

TEST_CASE("non-uniform lengths are rejected") {
    Instance inst{9, {{0, 2}, {0, 3}}};
    auto norm = normalize(inst, ProblemKind::JPack);
    REQUIRE(norm.ok);
    CHECK_THROWS_AS(solve_unit_jfamily(norm), std::invalid_argument);
}
