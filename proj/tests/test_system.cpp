#include "bkb/catalog.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace bkb;

namespace {

Scalar S(long a, long b = 1) {
    Rational q(a, b);
    q.canonicalize();
    return Scalar(q);
}

// Every acyclic orientation of the Coxeter graph.
std::vector<AcyclicOrientation> all_orientations(const CoxeterSystem& W) {
    Word id(static_cast<std::size_t>(W.rank()));
    std::iota(id.begin(), id.end(), 0);
    AcyclicOrientation base = ao_of_coxeter_word(W, id);
    std::vector<AcyclicOrientation> out;
    for (unsigned mask = 0; mask < (1u << base.edges.size()); ++mask) {
        AcyclicOrientation o = base;
        for (std::size_t k = 0; k < o.edges.size(); ++k) o.forward[k] = (mask >> k & 1u) != 0;
        if (o.is_acyclic()) out.push_back(o);
    }
    return out;
}

bool conjugate(const std::vector<GroupElement>& group, const GroupElement& a, const GroupElement& b) {
    for (const auto& g : group)
        if (g * a * g.inverse() == b) return true;
    return false;
}

}  // namespace

TEST_CASE("bilinear form") {
    auto A2 = type_A(2);
    auto B = bilinear_form(*A2);
    CHECK(B[0][0] == S(1));
    CHECK(B[0][1] == S(-1, 2));
    CHECK(B[1][0] == S(-1, 2));
    CHECK(bilinear_form(*type_A(3))[0][2] == S(0));
    CHECK(bilinear_form(*dihedral(kInf))[0][1] == S(-1));
    CoxeterSystem mu({"1", "2"}, {{1, kInf}, {kInf, 1}}, {{{0, 1}, Rational(3, 2)}});
    CHECK(mu.B(0, 1) == S(-3, 2));
    CHECK(bilinear_form(*type_B(2))[0][1] * bilinear_form(*type_B(2))[0][1] == S(1, 2));
}

TEST_CASE("invalid systems are rejected") {
    CHECK_THROWS_AS(CoxeterSystem({"1", "2"}, {{1, 3}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterSystem({"1", "2"}, {{2, 3}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterSystem({"1", "2"}, {{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterSystem({"1", "2"}, {{1, kInf}, {kInf, 1}}, {{{0, 1}, Rational(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterSystem({"1", "2"}, {{1, 3}, {3, 1}}, {{{0, 1}, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterSystem({"1", "1"}, {{1, 3}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("finiteness") {
    CHECK(is_finite(*type_A(3)));
    CHECK(is_finite(*type_H3()));
    CHECK(is_finite(*dihedral(7)));
    CHECK_FALSE(is_finite(*affine_A(2)));
    CHECK_FALSE(is_finite(*dihedral(kInf)));
    CHECK_FALSE(is_finite(*affine_G2()));
    CHECK_FALSE(is_finite(*rank3(2, 3, 7)));
    CHECK(is_finite(*rank3(2, 3, 5)));  // H3
}

TEST_CASE("parabolic subsystems") {
    auto W = type_B(3);
    CoxeterSystem all = parabolic(*W, {0, 1, 2});
    CHECK(all.matrix() == W->matrix());
    CHECK(all.labels() == W->labels());
    CHECK(parabolic(*W, {}).rank() == 0);
    auto F = family_B(5, 3, 3);
    std::vector<int> J;
    for (int k = 1; k <= 3; ++k) J.push_back(F->index_of(std::to_string(k)));
    CoxeterSystem P = parabolic(*F, J);
    CHECK(P.matrix() == type_A(3)->matrix());
    CHECK(P.labels() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("acyclic orientation of a Coxeter word") {
    auto A2 = type_A(2);
    AcyclicOrientation o = ao_of_coxeter_word(*A2, A2->parse_word("1,2"));  // c = s2 s1
    CHECK(o.has_arrow(0, 1));
    CHECK_FALSE(o.has_arrow(1, 0));
    auto A3 = type_A(3);
    AcyclicOrientation p = ao_of_coxeter_word(*A3, A3->parse_word("3,2,1"));  // c = s1 s2 s3
    CHECK(p.has_arrow(2, 1));
    CHECK(p.has_arrow(1, 0));
    CHECK(ao_of_coxeter_word(*right_angled(3, {}), {0, 1, 2}).edges.empty());
    CHECK_THROWS(ao_of_coxeter_word(*A3, {0, 0, 1}));
}

TEST_CASE("flip equivalence") {
    for (auto sp : {type_A(4), type_B(3), affine_D4()}) {
        auto os = all_orientations(*sp);
        for (const auto& a : os)
            for (const auto& b : os) CHECK(flip_equivalent(a, b));  // trees
    }
    auto A2t = affine_A(2);
    auto os = all_orientations(*A2t);
    CHECK(os.size() == 6);
    for (const auto& a : os)
        for (const auto& b : os) CHECK(flip_equivalent(a, b) == (counterclockwise_edges(a) == counterclockwise_edges(b)));
}

TEST_CASE("flip classes on cycles are counterclockwise-count level sets") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        auto W = affine_A(n - 1);
        auto os = all_orientations(*W);
        for (const auto& a : os)
            for (const auto& b : os) {
                bool f = flip_equivalent(a, b);
                CHECK(f == (counterclockwise_edges(a) == counterclockwise_edges(b)));
                CHECK(f == flip_equivalent(b, a));
            }
    }
}

TEST_CASE("conjugate Coxeter elements have flip-equivalent orientations") {
    for (auto sp : {type_A(3), type_B(3), type_H3(), type_A(4), rank3(3, 3, 3)}) {
        const CoxeterSystem& W = *sp;
        if (!is_finite(W)) continue;
        auto group = enumerate_group(W);
        Word p(static_cast<std::size_t>(W.rank()));
        std::iota(p.begin(), p.end(), 0);
        std::vector<Word> words;
        do words.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for (const auto& a : words)
            for (const auto& b : words)
                CHECK(conjugate(group, element_of(W, a), element_of(W, b)) ==
                      flip_equivalent(ao_of_coxeter_word(W, a), ao_of_coxeter_word(W, b)));
    }
}

TEST_CASE("folding E6 affine gives F4 affine") {
    auto E6 = affine_E6();
    FoldingMap fm = fold(*E6, {0, 6, 2, 5, 4, 3, 1});
    REQUIRE(fm.orbits.size() == 5);
    CHECK(fm.orbits[1] == std::vector<int>{1, 6});
    CHECK(fm.orbits[3] == std::vector<int>{3, 5});
    const CoxeterSystem& F = fm.folded;
    // path o0 - o2 - o4 =4= o3 - o1
    CHECK(F.m(0, 2) == 3);
    CHECK(F.m(2, 4) == 3);
    CHECK(F.m(4, 3) == 4);
    CHECK(F.m(3, 1) == 3);
    CHECK(F.m(0, 1) == 2);
    CHECK(F.m(0, 4) == 2);
    CHECK(F.m(1, 2) == 2);
    CHECK(F.m(1, 4) == 2);
    CHECK(F.m(0, 3) == 2);
    CHECK(F.m(2, 3) == 2);
    CHECK_FALSE(is_finite(F));
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) CHECK(fm.bfold[a][b] == F.B(static_cast<int>(a), static_cast<int>(b)));
    CHECK(fm.iota({1, 3}) == Word{1, 6, 3, 5});
}

TEST_CASE("identity fold and cycle reflection") {
    auto W = type_B(3);
    FoldingMap id = fold(*W, {0, 1, 2});
    CHECK(id.folded.matrix() == W->matrix());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(id.bfold[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == W->B(a, b));
    for (int n = 3; n <= 5; ++n) {
        CAPTURE(n);
        int N = 2 * n - 2;
        auto A = affine_A(N - 1);
        std::vector<int> sigma;
        for (int i = 0; i < N; ++i) sigma.push_back((N - i) % N);
        FoldingMap fm = fold(*A, sigma);
        CHECK(fm.folded.matrix() == affine_C(n - 1)->matrix());
    }
}

TEST_CASE("fold rejects non-automorphisms and dependent orbits") {
    CHECK_THROWS_AS(fold(*type_B(3), {2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fold(*type_A(2), {1, 0}), std::invalid_argument);
}
