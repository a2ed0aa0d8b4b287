#include <catch2/catch_amalgamated.hpp>

#include "imove/core.hpp"

using namespace imove;

TEST_CASE("floored division and modulo on negatives") {
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_mod(-6, 3) == 0);
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(-7, 3) == -2);
    for (i64 a = -20; a <= 20; ++a)
        for (i64 b = 1; b <= 5; ++b) {
            CHECK(floor_div(a, b) * b + floor_mod(a, b) == a);
            CHECK(floor_mod(a, b) >= 0);
            CHECK(floor_mod(a, b) < b);
        }
}

TEST_CASE("interval intersection is half-open") {
    Interval a{0, 2}, b{2, 2}, c{1, 2};
    CHECK_FALSE(a.intersects(b));
    CHECK(a.intersects(c));
    CHECK(c.intersects(b));
    CHECK(a.contains_point(1));
    CHECK_FALSE(a.contains_point(2));
}

TEST_CASE("kind names round-trip") {
    for (ProblemKind k : kAllKinds) {
        auto back = kind_from_name(kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(kind_from_name("frobnicate").has_value());
}

TEST_CASE("verifier counts only real displacements") {
    Instance inst{10, {{0, 2}, {5, 2}}};
    Placement pl{{0, 5}};  // nobody moved
    auto rep = verify(inst, ProblemKind::Pack, pl);
    CHECK(rep.movedCount == 0);
    CHECK(rep.predicateHolds);
    pl.finalX = {0, 6};
    rep = verify(inst, ProblemKind::Pack, pl);
    CHECK(rep.movedCount == 1);
    CHECK(rep.predicateHolds);
}

TEST_CASE("verifier predicates per kind") {
    Instance inst{6, {{0, 2}, {2, 2}, {4, 2}}};

    SECTION("pack wants disjoint inside B") {
        CHECK(verify(inst, ProblemKind::Pack, Placement{{0, 2, 4}}).predicateHolds);
        CHECK_FALSE(verify(inst, ProblemKind::Pack, Placement{{0, 1, 4}}).predicateHolds);
        CHECK_FALSE(verify(inst, ProblemKind::Pack, Placement{{-1, 2, 4}}).predicateHolds);
    }
    SECTION("cover wants union over B, overlaps fine") {
        Instance cov{5, {{0, 3}, {2, 3}}};
        CHECK(verify(cov, ProblemKind::Cover, Placement{{0, 2}}).predicateHolds);
        CHECK(verify(cov, ProblemKind::Cover, Placement{{0, 3}}).predicateHolds);
        CHECK_FALSE(verify(cov, ProblemKind::Cover, Placement{{0, 4}}).predicateHolds);
    }
    SECTION("join wants one contiguous block, anywhere") {
        CHECK(verify(inst, ProblemKind::Join, Placement{{-7, -5, -3}}).predicateHolds);
        CHECK_FALSE(verify(inst, ProblemKind::Join, Placement{{0, 3, 5}}).predicateHolds);
        CHECK_FALSE(verify(inst, ProblemKind::Join, Placement{{0, 1, 4}}).predicateHolds);
    }
    SECTION("jpack block must sit inside B") {
        CHECK(verify(inst, ProblemKind::JPack, Placement{{0, 2, 4}}).predicateHolds);
        CHECK_FALSE(verify(inst, ProblemKind::JPack, Placement{{1, 3, 5}}).predicateHolds);
    }
    SECTION("jcover block must contain B") {
        Instance jc{4, {{0, 3}, {9, 3}}};
        CHECK(verify(jc, ProblemKind::JCover, Placement{{-1, 2}}).predicateHolds);
        CHECK(verify(jc, ProblemKind::JCover, Placement{{0, 3}}).predicateHolds);
        CHECK_FALSE(verify(jc, ProblemKind::JCover, Placement{{1, 4}}).predicateHolds);
    }
    SECTION("tile block must coincide with B") {
        CHECK(verify(inst, ProblemKind::Tile, Placement{{0, 2, 4}}).predicateHolds);
        CHECK(verify(inst, ProblemKind::Tile, Placement{{2, 0, 4}}).predicateHolds);
        CHECK_FALSE(verify(inst, ProblemKind::Tile, Placement{{1, 3, 5}}).predicateHolds);
    }
    SECTION("placement size mismatch throws") {
        CHECK_THROWS_AS(verify(inst, ProblemKind::Pack, Placement{{0, 2}}), std::invalid_argument);
    }
}

TEST_CASE("length preconditions") {
    Instance small{10, {{0, 2}, {0, 3}}};  // total 5
    CHECK_FALSE(kind_precondition_violation(small, ProblemKind::Pack).has_value());
    CHECK(kind_precondition_violation(small, ProblemKind::Cover).has_value());
    CHECK(kind_precondition_violation(small, ProblemKind::Tile).has_value());
    CHECK_FALSE(kind_precondition_violation(small, ProblemKind::Join).has_value());
    Instance exact{5, {{0, 2}, {0, 3}}};
    for (ProblemKind k : kAllKinds)
        CHECK_FALSE(kind_precondition_violation(exact, k).has_value());
}

TEST_CASE("instance file round-trip") {
    Instance inst{13, {{-1, 2}, {3, 2}, {12, 2}}};
    Instance back = parse_instance(format_instance(inst));
    REQUIRE(back.n() == 3);
    CHECK(back.bLen == 13);
    CHECK(back.intervals[0].x == -1);
    CHECK(back.intervals[2].len == 2);

    Placement pl{{4, -7, 0}};
    Placement pback = parse_placement(format_placement(pl), 3);
    CHECK(pback.finalX == pl.finalX);
}

TEST_CASE("instance parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_instance(""), parse_error);
    CHECK_THROWS_AS(parse_instance("2 10\n0 1\n"), parse_error);      // missing line
    CHECK_THROWS_AS(parse_instance("2 10\n0 1\nx 1\n"), parse_error);  // non-integer
    CHECK_THROWS_AS(parse_instance("1 0\n0 1\n"), parse_error);        // bLen < 1
    CHECK_THROWS_AS(parse_instance("1 5\n0 0\n"), parse_error);        // len < 1
    CHECK_THROWS_AS(parse_placement("1 2 3", 2), parse_error);
}

TEST_CASE("instance summary helpers") {
    Instance inst{9, {{0, 3}, {1, 3}, {4, 2}}};
    CHECK(inst.total_len() == 8);
    CHECK(inst.kappa() == 2);
    CHECK(inst.distinct_lengths() == std::vector<i64>{2, 3});
}
