#include "bkb/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace bkb;

TEST_CASE("D4 trajectory table") {
    Counterexample ex = d4_example();
    const CoxeterSystem& W = *ex.sys;
    TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 40);
    REQUIRE(rec.steps.size() == 10);
    std::vector<std::vector<std::string>> expect{
        {"0"}, {"1", "0"}, {"1", "0"}, {"3", "1", "0"}, {"4", "3", "1", "0"},
        {"4", "3", "1"}, {"4", "3"}, {"4", "3"}, {"4"}, {}};
    for (std::size_t k = 0; k < expect.size(); ++k) CHECK(rec.steps[k].after == product(W, expect[k]));
    CHECK(rec.steps[2].action == Action::Reflect);
    CHECK(rec.steps[7].action == Action::Reflect);
    REQUIRE(rec.period);
    CHECK(*rec.period == 2);
    CHECK(*rec.preperiod == 0);
}

TEST_CASE("F4 and E8 return to the identity after three rotations") {
    for (auto ex : {f4_example(), e8_example()}) {
        CAPTURE(ex.name);
        TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 200);
        REQUIRE(rec.period);
        CHECK(*rec.period == ex.period);
        CHECK(*rec.preperiod == 0);
        CHECK_FALSE(ex.L.contains(ex.u0));
    }
}

TEST_CASE("B family") {
    for (int n = 3; n <= 6; ++n)
        for (auto [b, bp] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {3, 5}, {4, 4}}) {
            Counterexample ex = family_B_example(n, b, bp);
            CAPTURE(ex.name);
            TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 20 * (n + 1) * n);
            REQUIRE(rec.period);
            CHECK(*rec.period == ex.period);
            CHECK(*rec.preperiod == 0);
            GroupElement u = ex.u0;
            for (int k = 0; k < n - 1; ++k) u = pro_c(ex.L, ex.ordering, u);
            CHECK(u == product(*ex.sys, {"0", "1", "0"}));
            for (auto [name, ok] : family_B_identities(n, b, bp)) {
                CAPTURE(name);
                CHECK(ok);
            }
        }
}

TEST_CASE("D family") {
    for (int n = 3; n <= 6; ++n)
        for (bool stated : {false, true})
            for (int a : {3, 4}) {
                Counterexample ex = family_D_example(n, a, 3, 3, 4, stated);
                CAPTURE(ex.name);
                CAPTURE(stated);
                TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 20 * (n + 2) * n);
                REQUIRE(rec.period);
                CHECK(*rec.period == ex.period);
                CHECK(*rec.preperiod == 0);
                CHECK_FALSE(ex.L.contains(ex.u0));
            }
}

TEST_CASE("toggle examples") {
    Counterexample ex = d4_example();
    const CoxeterSystem& W = *ex.sys;
    GroupElement e = GroupElement::identity(W);
    CHECK(toggle(ex.L, 0, e) == product(W, {"0"}));
    GroupElement u = product(W, {"1", "0"});
    CHECK(toggle(ex.L, 1, product(W, {"0"})) == u);
    // third step: u^{-1} alpha_2 lies in R(L), so the billiard reflects
    CHECK(toggle(ex.L, 2, u) == u);
    CHECK(apply_toggle_word(ex.L, {0, 1, 2}, e) == u);
    CHECK(pro_c(ex.L, ex.ordering, e) == product(W, {"4", "3", "1", "0"}));
    CHECK(pro_c(ex.L, ex.ordering, pro_c(ex.L, ex.ordering, e)) == e);
}

TEST_CASE("toggles keep L inside L") {
    std::mt19937 rng(31);
    for (auto sp : {type_A(3), affine_A(2), affine_G2()}) {
        const CoxeterSystem& W = *sp;
        auto pool = ball(W, 3);
        for (int t = 0; t < 10; ++t) {
            std::vector<GroupElement> K{pool[rng() % pool.size()], pool[rng() % pool.size()]};
            ConvexSet L = ConvexSet::hull(W, K);
            for (const auto& x : hull_expand(W, K))
                for (int i = 0; i < W.rank(); ++i) {
                    GroupElement y = toggle(L, i, x);
                    CHECK(L.contains(y));
                    CHECK(toggle(L, i, y) == x);
                }
        }
    }
}

TEST_CASE("heaviness verdicts") {
    Counterexample ex = d4_example();
    HeavyVerdict v = is_heavy_bounded(ex.L, ex.ordering);
    CHECK(v.kind == HeavyVerdict::NotHeavy);
    REQUIRE(v.witness);
    CHECK_FALSE(ex.L.contains(*v.witness));
    auto A3 = type_A(3);
    ConvexSet S = ConvexSet::hull(*A3, s4_example_set(*A3));
    CHECK(is_heavy_bounded(S, {0, 1, 2}).kind == HeavyVerdict::HeavyUpToBound);
    auto At = affine_A(2);
    ConvexSet T = ConvexSet::hull(*At, {GroupElement::identity(*At), element_of(*At, {0, 1})});
    CHECK(is_heavy_bounded(T, {0, 1, 2}).kind == HeavyVerdict::HeavyUpToBound);
    CHECK(std::string(verdict_str(HeavyVerdict::NotHeavy)) != verdict_str(HeavyVerdict::Inconclusive));
}

TEST_CASE("sort_check") {
    auto B2 = type_B(2);
    ConvexSet L = ConvexSet::hull(*B2, {product(*B2, {"1"}), product(*B2, {"2", "1"})});
    CHECK(sort_check(L, {0, 1, 0, 1}));
    CHECK_FALSE(sort_check(L, {0}));
    auto A3 = type_A(3);
    ConvexSet S = ConvexSet::hull(*A3, s4_example_set(*A3));
    CHECK(sort_check(S, reduced_word(long_element(*A3))));
    CHECK_FALSE(sort_check(S, {0, 1, 2}));
}
