#include "bkb/billiards.hpp"
#include "bkb/catalog.hpp"
#include "bkb/typea.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bkb;

TEST_CASE("poset counts") {
    CHECK(all_posets(1).size() == 1);
    CHECK(all_posets(2).size() == 3);
    CHECK(all_posets(3).size() == 19);
    CHECK(all_posets(4).size() == 219);
}

TEST_CASE("permutation dictionary round trip") {
    auto W = type_A(3);
    std::set<std::vector<int>> seen;
    for (const auto& u : all_perms(4)) {
        GroupElement g = element_of_perm(*W, u);
        CHECK(perm_of_element(g) == u);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (a != b) CHECK(g.act(root_e(*W, a, b)) == root_e(*W, u[a], u[b]));
    }
    CHECK_THROWS(element_of_perm(*type_B(3), {0, 1, 2, 3}));
}

TEST_CASE("S4 example poset") {
    auto W = type_A(3);
    ConvexSet L = ConvexSet::hull(*W, s4_example_set(*W));
    Poset P = poset_from_convex(L);
    // 1-based pairs (2,3), (1,3), (2,4)
    std::vector<std::pair<int, int>> expect{{0, 2}, {1, 2}, {1, 3}};
    CHECK(P.pairs() == expect);
    CHECK(hull_expand(*W, L.generators()).size() == 5);
    CHECK(linear_extensions(P).size() == 5);
}

TEST_CASE("antichain and chain") {
    auto W = type_A(3);
    Poset anti = Poset::from_pairs(4, {});
    CHECK(hull_expand(*W, convex_from_poset(*W, anti).generators()).size() == 24);
    Poset chain = Poset::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    auto ext = linear_extensions(chain);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0] == Perm{0, 1, 2, 3});
    CHECK(poset_from_convex(convex_from_poset(*W, chain)) == chain);
}

TEST_CASE("poset toggles equal root toggles") {
    for (int n = 1; n <= 3; ++n) {
        auto W = type_A(n);
        for (const auto& P : all_posets(n + 1)) {
            ConvexSet L = convex_from_poset(*W, P);
            CHECK(poset_from_convex(L) == P);
            for (const auto& u : all_perms(n + 1)) {
                GroupElement g = element_of_perm(*W, u);
                for (int i = 0; i < n; ++i) CHECK(perm_of_element(toggle(L, i, g)) == typeA_bk(P, i, u));
            }
        }
    }
}

TEST_CASE("Pro, Ev and Gyr sort") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& P : all_posets(n + 1)) {
            int k = (n + 2) / 2;
            for (const auto& u : all_perms(n + 1)) {
                Perm v = u;
                for (int t = 0; t < n; ++t) v = typeA_pro(P, v);
                CHECK(is_linear_extension(P, v));
                CHECK(is_linear_extension(P, typeA_ev(P, u)));
                Perm w = u;
                for (int t = 0; t < k; ++t) w = typeA_gyr(P, w);
                CHECK(is_linear_extension(P, w));
            }
        }
}
