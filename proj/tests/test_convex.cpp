#include "bkb/catalog.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace bkb;

namespace {

// Distance in the Cayley graph with edges u -- s_i u.
int dist(const GroupElement& a, const GroupElement& b) { return length(b * a.inverse()); }

// Every element on a geodesic between two members, iterated to a fixed point.
std::vector<GroupElement> brute_hull(const std::vector<GroupElement>& group, std::vector<GroupElement> S) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GroupElement> add;
        for (std::size_t p = 0; p < S.size(); ++p)
            for (std::size_t q = p + 1; q < S.size(); ++q) {
                int d = dist(S[p], S[q]);
                for (const auto& w : group) {
                    if (std::find(S.begin(), S.end(), w) != S.end()) continue;
                    if (std::find(add.begin(), add.end(), w) != add.end()) continue;
                    if (dist(S[p], w) + dist(w, S[q]) == d) add.push_back(w);
                }
            }
        if (!add.empty()) {
            grew = true;
            S.insert(S.end(), add.begin(), add.end());
        }
    }
    return S;
}

bool same_set(std::vector<GroupElement> a, std::vector<GroupElement> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

std::vector<GroupElement> random_generators(const std::vector<GroupElement>& group, std::mt19937& rng) {
    std::vector<GroupElement> K;
    std::size_t k = 1 + rng() % 3;
    while (K.size() < k) {
        const GroupElement& g = group[rng() % group.size()];
        if (std::find(K.begin(), K.end(), g) == K.end()) K.push_back(g);
    }
    return K;
}

}  // namespace

TEST_CASE("hull examples") {
    auto A2 = type_A(2);
    CHECK(hull_expand(*A2, {product(*A2, {"1"})}).size() == 1);
    CHECK(hull_expand(*A2, {GroupElement::identity(*A2), product(*A2, {"1", "2"})}).size() == 3);
    CHECK(hull_expand(*A2, {GroupElement::identity(*A2), long_element(*A2)}).size() == 6);
    auto A3 = type_A(3);
    auto S4 = s4_example_set(*A3);
    CHECK(same_set(hull_expand(*A3, S4), S4));
    CHECK(hull_expand(*A3, {}).empty());
}

TEST_CASE("R(L) on the S4 example") {
    auto A3 = type_A(3);
    ConvexSet L = ConvexSet::hull(*A3, s4_example_set(*A3));
    CHECK(L.in_RL(simple_root(*A3, 1)) == Tri::Yes);
    CHECK(L.in_RL(simple_root(*A3, 0)) == Tri::No);
    CHECK(L.in_RL(simple_root(*A3, 2)) == Tri::No);
    CHECK(L.in_RL(negate(simple_root(*A3, 1))) == Tri::No);
    for (const auto& u : s4_example_set(*A3)) CHECK(L.contains(u));
    CHECK_FALSE(L.contains(product(*A3, {"2"})));
}

TEST_CASE("hull_expand matches the brute-force geodesic closure") {
    std::mt19937 rng(19);
    for (auto sp : {type_A(3), type_B(3), dihedral(5)}) {
        const CoxeterSystem& W = *sp;
        auto group = enumerate_group(W);
        for (int t = 0; t < 15; ++t) {
            auto K = random_generators(group, rng);
            CHECK(same_set(hull_expand(W, K), brute_hull(group, K)));
        }
    }
}

TEST_CASE("R(hull K) by brute force") {
    std::mt19937 rng(23);
    for (auto sp : {type_A(3), type_H3(), type_B(3)}) {
        const CoxeterSystem& W = *sp;
        auto group = enumerate_group(W);
        RootSet roots = enumerate_roots(W, 40);
        for (int t = 0; t < 15; ++t) {
            auto K = random_generators(group, rng);
            auto hull = hull_expand(W, K);
            ConvexSet L = ConvexSet::hull(W, K);
            for (const auto& b : roots) {
                bool all_pos = std::all_of(hull.begin(), hull.end(), [&](const GroupElement& w) { return is_positive(w.act(b)); });
                CHECK((L.in_RL(b) == Tri::Yes) == all_pos);
            }
        }
    }
}

TEST_CASE("separators by brute force") {
    std::mt19937 rng(29);
    for (auto sp : {type_A(3), type_B(3), dihedral(7)}) {
        const CoxeterSystem& W = *sp;
        auto group = enumerate_group(W);
        RootSet roots = enumerate_roots(W, 40);
        for (int t = 0; t < 10; ++t) {
            auto K = random_generators(group, rng);
            auto hull = hull_expand(W, K);
            ConvexSet L = ConvexSet::hull(W, K);
            for (const auto& u : group) {
                SeparatorSet s = separators(L, u);
                CHECK(s.complete);
                bool in = std::find(hull.begin(), hull.end(), u) != hull.end();
                CHECK(s.roots.empty() == in);
                CHECK(L.contains(u) == in);
                std::size_t expect = 0;
                for (const auto& b : roots) {
                    if (is_positive(u.act(b))) continue;
                    if (!std::all_of(hull.begin(), hull.end(), [&](const GroupElement& x) { return is_positive(x.act(b)); }))
                        continue;
                    ++expect;
                    CHECK(s.roots.contains(b));
                }
                CHECK(s.roots.size() == expect);
                // each separating wall is crossed on the way to L
                int d = 1 << 20;
                for (const auto& x : hull) d = std::min(d, dist(x, u));
                CHECK(s.roots.size() <= static_cast<std::size_t>(d));
            }
        }
    }
}

TEST_CASE("strata and transmitting roots") {
    auto A2 = type_A(2);
    ConvexSet L = ConvexSet::hull(*A2, {GroupElement::identity(*A2)});
    // every stratum of a point is a single element
    for (const auto& u : enumerate_group(*A2)) {
        Stratum s = stratum_of(L, u, 100);
        CHECK(s.complete);
        CHECK(s.members.size() == 1);
    }
    auto A3 = type_A(3);
    ConvexSet M = ConvexSet::hull(*A3, s4_example_set(*A3));
    Stratum in = stratum_of(M, GroupElement::identity(*A3), 100);
    CHECK(in.members.size() == 5);
    CHECK(in.sep.roots.empty());
    CHECK(transmitting_roots(M, in).empty());
    GroupElement u = product(*A3, {"2"});
    Stratum s = stratum_of(M, u, 100);
    for (const auto& w : s.members) CHECK(separators(M, w) == s.sep);
    RootSet tr = transmitting_roots(M, s);
    CHECK(tr.size() >= 1);
    for (const auto& b : tr) CHECK(s.sep.roots.contains(b));
    Stratum capped = stratum_of(M, GroupElement::identity(*A3), 2);
    CHECK_FALSE(capped.complete);
}

TEST_CASE("tau-equivalence") {
    auto A3 = type_A(3);
    ConvexSet M = ConvexSet::hull(*A3, s4_example_set(*A3));
    Stratum in = stratum_of(M, GroupElement::identity(*A3), 100);
    CHECK(tau_equivalent(M, in.members, in.members));
    CHECK_FALSE(tau_equivalent(M, in.members, {GroupElement::identity(*A3)}));
    auto A2 = type_A(2);
    ConvexSet P = ConvexSet::hull(*A2, {GroupElement::identity(*A2)});
    CHECK_FALSE(tau_equivalent(P, {product(*A2, {"1"})}, {product(*A2, {"2"})}));  // labels differ
    auto Winf = dihedral(kInf);
    ConvexSet E = ConvexSet::hull(*Winf, {GroupElement::identity(*Winf)});
    // s1 s2 and s1 s2 s1 s2: a 1-edge down and a 2-loop each
    CHECK(tau_equivalent(E, {element_of(*Winf, {1, 0})}, {element_of(*Winf, {1, 0, 1, 0})}));
    CHECK_FALSE(tau_equivalent(E, {element_of(*Winf, {1, 0})}, {element_of(*Winf, {0, 1})}));
}

TEST_CASE("half-space sets") {
    auto A2 = type_A(2);
    ConvexSet L = ConvexSet::halfspaces(*A2, {{simple_root(*A2, 0), +1}});
    CHECK_FALSE(L.is_hull());
    CHECK(L.contains(GroupElement::identity(*A2)));
    CHECK(L.contains(product(*A2, {"2"})));
    CHECK_FALSE(L.contains(product(*A2, {"1"})));
    CHECK(L.in_RL(simple_root(*A2, 0)) == Tri::Yes);
    CHECK(L.in_RL(simple_root(*A2, 1)) == Tri::No);
    auto group = enumerate_group(*A2);
    std::vector<GroupElement> members;
    for (const auto& g : group)
        if (L.contains(g)) members.push_back(g);
    CHECK(members.size() == 3);
    ConvexSet H = ConvexSet::hull(*A2, members);
    for (const auto& b : enumerate_roots(*A2, 10)) CHECK(L.in_RL(b) == H.in_RL(b));
    // contradictory constraints leave no witness
    CHECK_THROWS(ConvexSet::halfspaces(*A2, {{simple_root(*A2, 0), +1}, {simple_root(*A2, 0), -1}}));
}

TEST_CASE("half-space oracle reports Unknown at small effort") {
    auto W = affine_A(2);
    ConvexSet L = ConvexSet::halfspaces(*W, {{simple_root(*W, 0), +1}}, GroupElement::identity(*W));
    // s_1 lies in L and negates alpha_1, one step from the witness
    CHECK(L.in_RL(simple_root(*W, 1), Effort{0, 0, 1}) == Tri::Unknown);
    CHECK(L.in_RL(simple_root(*W, 1), Effort{1, 0, 100}) == Tri::No);
    CHECK(L.in_RL(simple_root(*W, 1), Effort{0, 0, 1}) == Tri::No);  // decided answers are kept
    CHECK(L.in_RL(simple_root(*W, 0), Effort{0, 0, 1}) == Tri::Yes);
    ConvexSet big = ConvexSet::halfspaces(*W, {{simple_root(*W, 0), +1}}, GroupElement::identity(*W));
    big.set_effort(Effort{0, 0, 1});
    SeparatorSet s = separators(big, element_of(*W, {1, 2}));
    CHECK_FALSE(s.complete);
}
