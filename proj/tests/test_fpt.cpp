#include <catch2/catch_amalgamated.hpp>

#include "imove/fpt.hpp"
#include "imove/generators.hpp"
#include "imove/oracle.hpp"

using namespace imove;

namespace {
Instance random_instance(Rng& rng, ProblemKind kind, i64 maxN = 7, int maxKappa = 3) {
    const i64 n = 1 + rng.below(maxN);
    const int kappa = 1 + static_cast<int>(rng.below(std::min<i64>(maxKappa, n)));
    return gen_random(rng.next(), n, kappa, 16, kind, rng.below(2) == 0);
}
}  // namespace

TEST_CASE("tuple space: size, order, id round-trip") {
    for (int kappa = 1; kappa <= 4; ++kappa)
        for (i64 tau = 0; tau <= 6; ++tau) {
            TupleSpace ts = tuple_space(kappa, tau);
            CHECK(ts.size() == TupleSpace::count(kappa, tau));
            for (i64 t = 0; t < ts.size(); ++t) {
                i64 s = 0;
                for (int c : ts.tuples[static_cast<size_t>(t)]) {
                    CHECK(c >= 0);
                    s += c;
                }
                CHECK(s <= tau);
                CHECK(ts.id(ts.tuples[static_cast<size_t>(t)]) == static_cast<int>(t));
                if (t > 0) CHECK(ts.tuples[static_cast<size_t>(t - 1)] < ts.tuples[static_cast<size_t>(t)]);
            }
        }
    CHECK(tuple_space(2, 3).size() == 10);  // C(5,2)
    CHECK(tuple_space(3, 2).size() == 10);  // C(5,3)
}

TEST_CASE("tuple space refuses absurd sizes") {
    CHECK(TupleSpace::count(6, 100'000) > kFptCellCap);
    CHECK_THROWS_AS(tuple_space(6, 100'000), resource_error);
}

TEST_CASE("multiplicity prefixes count sorted lengths") {
    std::vector<i64> sorted{1, 1, 2, 3, 3, 3};
    std::vector<i64> distinct{1, 2, 3};
    auto m = multiplicity_prefixes(sorted, distinct);
    REQUIRE(m.size() == 8);
    CHECK(m[0] == std::vector<int>{0, 0, 0});
    CHECK(m[2] == std::vector<int>{2, 0, 0});
    CHECK(m[4] == std::vector<int>{2, 1, 1});
    CHECK(m[6] == std::vector<int>{2, 1, 3});
    CHECK(m[7] == m[6]);
}

TEST_CASE("decision table agrees with the exhaustive search") {
    Rng rng(2718);
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 60; ++it) {
            Instance inst = random_instance(rng, kind);
            MoveAnswer expect = oracle_solve(inst, kind);
            REQUIRE(expect.feasible);
            INFO(kind_name(kind) << " " << format_instance(inst));
            for (i64 tau = 0; tau <= inst.n(); ++tau) {
                const bool want = tau >= expect.tauStar;
                CHECK(fpt_decide_A(inst, kind, tau) == want);
                if (kind != ProblemKind::Cover) CHECK(fpt_decide_Aprime(inst, kind, tau) == want);
            }
        }
    }
}

TEST_CASE("decision is monotone in the move budget") {
    Rng rng(161803);
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 30; ++it) {
            Instance inst = random_instance(rng, kind);
            bool prev = false;
            for (i64 tau = 0; tau <= inst.n(); ++tau) {
                const bool now = fpt_decide_A(inst, kind, tau);
                CHECK((!prev || now));  // once yes, always yes
                prev = now;
            }
            CHECK(prev);  // moving everything is always enough
        }
    }
}

TEST_CASE("fpt_solve equals the exhaustive optimum") {
    Rng rng(314159);
    for (ProblemKind kind : kAllKinds) {
        for (int it = 0; it < 40; ++it) {
            Instance inst = random_instance(rng, kind);
            INFO(kind_name(kind) << " " << format_instance(inst));
            CHECK(fpt_solve(inst, kind).tauStar == oracle_solve(inst, kind).tauStar);
        }
    }
}

TEST_CASE("collapsed table rejects covering") {
    Instance inst{4, {{0, 5}}};
    CHECK_THROWS_AS(fpt_decide_Aprime(inst, ProblemKind::Cover, 1), std::invalid_argument);
}

TEST_CASE("contest sample solved via the parameterized table") {
    Instance inst{13, {{-1, 2}, {3, 2}, {4, 2}, {5, 2}, {12, 2}, {11, 2}}};
    CHECK(fpt_solve(inst, ProblemKind::JPack).tauStar == 3);
}

TEST_CASE("moderate multi-length instances verify against the exhaustive search") {
    Rng rng(99991);
    for (int it = 0; it < 25; ++it) {
        Instance inst = random_instance(rng, ProblemKind::Pack, 10, 3);
        CHECK(fpt_solve(inst, ProblemKind::Pack).tauStar ==
              oracle_solve(inst, ProblemKind::Pack, 12).tauStar);
    }
}
