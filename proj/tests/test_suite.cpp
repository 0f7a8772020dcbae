#include "bkb/suite.hpp"

#include <doctest.h>

using namespace bkb;

TEST_CASE("D4 check fails without one hull generator") {
    Counterexample ex = d4_example();
    CHECK(check_d4(ex).ok);
    const CoxeterSystem& W = *ex.sys;
    for (const char* drop : {"0", "1", "3", "4"}) {
        CAPTURE(drop);
        std::vector<GroupElement> K{product(W, {"2"})};
        for (const char* i : {"0", "1", "3", "4"})
            if (std::string(i) != drop) K.push_back(product(W, {i, "2", i}));
        Counterexample bad = ex;
        bad.L = ConvexSet::hull(W, K);
        CHECK_FALSE(check_d4(bad).ok);
    }
}

TEST_CASE("F4 check fails with period 2") {
    Counterexample ex = f4_example();
    CHECK(check_returns(ex).ok);
    ex.period = 2;
    CHECK_FALSE(check_returns(ex).ok);
    ex.period = 6;  // a multiple of the true period is not minimal
    CHECK_FALSE(check_returns(ex).ok);
}


TEST_CASE("acceptance list covers every criterion once") {
    auto checks = acceptance_checks();
    REQUIRE(checks.size() == 12);
    for (std::size_t k = 0; k < checks.size(); ++k) CHECK(checks[k].id == static_cast<int>(k) + 1);
}
