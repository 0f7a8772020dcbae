#include "bkb/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace bkb;

namespace {

RootVector vec(const CoxeterSystem& W, std::vector<Scalar> c) {
    RootVector v = zero_vector(W);
    for (std::size_t k = 0; k < c.size(); ++k) v[k] = c[k];
    return v;
}

Scalar sqrt3(const CoxeterSystem& W) { return cos_pi_over(6, W.field()) * Scalar(2); }

}  // namespace

TEST_CASE("simple reflections") {
    auto A2 = type_A(2);
    CHECK(apply_simple(*A2, 0, simple_root(*A2, 0)) == negate(simple_root(*A2, 0)));
    CHECK(apply_simple(*A2, 0, simple_root(*A2, 1)) == vec(*A2, {1, 1}));
    auto G = affine_G2();
    RootVector r = apply_simple(*G, 1, simple_root(*G, 2));
    CHECK(r == vec(*G, {0, sqrt3(*G), 1}));
    CHECK(sqrt3(*G) * sqrt3(*G) == Scalar(3));
}

TEST_CASE("positivity") {
    auto A2 = type_A(2);
    CHECK(is_positive(simple_root(*A2, 1)));
    CHECK_FALSE(is_positive(negate(simple_root(*A2, 1))));
    CHECK(is_positive(apply_simple(*A2, 0, simple_root(*A2, 1))));
    CHECK_THROWS_AS(is_positive(vec(*A2, {1, -1})), std::domain_error);
    CHECK_THROWS_AS(is_positive(zero_vector(*A2)), std::domain_error);
}

TEST_CASE("root enumeration") {
    auto A2 = type_A(2);
    CHECK(enumerate_roots(*A2, 10).size() == 6);
    RootSet d0 = enumerate_roots(*A2, 0);
    CHECK(d0.size() == 2);
    CHECK(d0.contains(simple_root(*A2, 0)));
    CHECK(d0.contains(simple_root(*A2, 1)));
    for (int m : {2, 3, 5, 8}) CHECK(enumerate_roots(*dihedral(m), 2 * m).size() == static_cast<std::size_t>(2 * m));
    for (const auto& r : enumerate_roots(*type_H3(), 20)) CHECK_NOTHROW(is_positive(r));
    RootSet h = enumerate_roots(*type_H3(), 20);
    CHECK(h.size() == 30);
    std::size_t pos = 0;
    for (const auto& r : h) {
        if (is_positive(r)) ++pos;
        CHECK(h.contains(negate(r)));
    }
    CHECK(pos == 15);
    CHECK(positive_roots(*type_H3(), 40).size() == 15);
}

TEST_CASE("rank-2 roots") {
    for (int m : {3, 4, 5, 6, 7}) {
        auto W = dihedral(m);
        CHECK(rank2_root(*W, 0, 1, 0) == simple_root(*W, 0));
        CHECK(rank2_root(*W, 0, 1, m - 1) == simple_root(*W, 1));
        CHECK(rank2_root(*W, 0, 1, 3) == rank2_root(*W, 0, 1, 3 + 2 * m));
        RootSet all = enumerate_roots(*W, 2 * m);
        for (int k = 0; k < 2 * m; ++k) CHECK(all.contains(rank2_root(*W, 0, 1, k)));
    }
    auto A2 = type_A(2);
    CHECK(rank2_root(*A2, 0, 1, 1) == vec(*A2, {1, 1}));
    CHECK_THROWS(rank2_root(*dihedral(kInf), 0, 1, 1));
}

TEST_CASE("small roots") {
    auto ra = right_angled(4, {{0, 1}, {2, 3}, {1, 2}});
    RootSet s = small_roots(*ra);
    CHECK(s.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(s.contains(simple_root(*ra, i)));
    for (auto sp : {type_A(3), type_B(3), type_H3(), dihedral(7)}) {
        RootSet sm = small_roots(*sp);
        RootSet pos = positive_roots(*sp, 60);
        CHECK(sm.size() == pos.size());
        for (const auto& r : pos) CHECK(sm.contains(r));
    }
    auto G = affine_G2();
    RootSet g = small_roots(*G);
    Scalar r3 = sqrt3(*G);
    CHECK(g.contains(vec(*G, {0, r3, 1})));
    CHECK(g.contains(vec(*G, {r3, r3, 1})));
    CHECK(g.contains(vec(*G, {r3, r3, 2})));
    CHECK(g.contains(vec(*G, {0, r3, 2})));
}

TEST_CASE("small roots of parabolic subgroups") {
    for (auto sp : {affine_G2(), rank3(2, 3, 7), affine_D4(), family_B(4, 3, 4)}) {
        const CoxeterSystem& W = *sp;
        RootSet all = small_roots(W);
        for (unsigned mask = 1; mask + 1 < (1u << W.rank()); ++mask) {
            std::vector<int> J;
            for (int i = 0; i < W.rank(); ++i)
                if (mask >> i & 1u) J.push_back(i);
            CoxeterSystem P = parabolic(W, J);
            RootSet sub = small_roots(P);
            std::size_t inside = 0;
            for (const auto& r : all) {
                bool in_span = true;
                for (int i = 0; i < W.rank(); ++i)
                    if (!(mask >> i & 1u) && !r[static_cast<std::size_t>(i)].is_zero()) in_span = false;
                if (!in_span) continue;
                ++inside;
                RootVector q;
                for (int i : J) q.push_back(r[static_cast<std::size_t>(i)]);
                CHECK(sub.contains(q));
            }
            CHECK(inside == sub.size());
        }
    }
}

TEST_CASE("nonnegative combinations") {
    auto A2 = type_A(2);
    RootVector a1 = simple_root(*A2, 0), a2 = simple_root(*A2, 1), s = vec(*A2, {1, 1});
    auto c = nonneg_combination(a1, a1, a2);
    REQUIRE(c);
    CHECK(c->first == Scalar(1));
    CHECK(c->second == Scalar(0));
    c = nonneg_combination(s, a1, a2);
    REQUIRE(c);
    CHECK(c->first == Scalar(1));
    CHECK(c->second == Scalar(1));
    CHECK_FALSE(nonneg_combination(negate(a1), a1, a2));
    // parallel pair
    c = nonneg_combination(a1, a1, scale(Scalar(2), a1));
    CHECK(c.has_value());
    CHECK_FALSE(nonneg_combination(negate(a1), a1, a1));
}

TEST_CASE("closure of root sets") {
    auto A2 = type_A(2);
    RootSet universe = positive_roots(*A2, 10);
    RootSet R;
    R.insert(simple_root(*A2, 0));
    CHECK(close_root_set(R, universe).size() == 1);
    R.insert(simple_root(*A2, 1));
    RootSet c = close_root_set(R, universe);
    CHECK(c.size() == 3);
    CHECK(c.contains(vec(*A2, {1, 1})));
    CHECK(close_root_set(c, universe).size() == 3);
}

TEST_CASE("reflections are involutions preserving B") {
    std::mt19937 rng(3);
    for (auto sp : {type_H3(), affine_A(2), rank3(2, 3, 7), affine_G2()}) {
        const CoxeterSystem& W = *sp;
        RootSet roots = enumerate_roots(W, 5);
        const auto& v = roots.items();
        for (int t = 0; t < 200; ++t) {
            const RootVector& b = v[rng() % v.size()];
            const RootVector& g = v[rng() % v.size()];
            int i = static_cast<int>(rng() % static_cast<unsigned>(W.rank()));
            CHECK(apply_simple(W, i, apply_simple(W, i, b)) == b);
            CHECK(bilinear(W, apply_simple(W, i, b), apply_simple(W, i, g)) == bilinear(W, b, g));
        }
    }
}
