#include "bkb/walkgraph.hpp"

#include <doctest.h>

#include <compare>
#include <random>
#include <set>

using namespace bkb;

namespace {

RootVector combo(const CoxeterSystem& W, std::vector<Scalar> c) {
    RootVector v = zero_vector(W);
    for (std::size_t k = 0; k < c.size(); ++k) v[k] = c[k];
    return v;
}

Scalar two_cos(const CoxeterSystem& W, int m) { return cos_pi_over(m, W.field()) * Scalar(2); }

// Sigma_{<=2}: simple roots and the interior dihedral roots of finite rank-2 parabolics.
RootSet sigma_le2(const CoxeterSystem& W) {
    RootSet s;
    for (int i = 0; i < W.rank(); ++i) s.insert(simple_root(W, i));
    for (int i = 0; i < W.rank(); ++i)
        for (int j = 0; j < W.rank(); ++j)
            if (i != j && W.m(i, j) != kInf)
                for (int k = 1; k < W.m(i, j) - 1; ++k) s.insert(rank2_root(W, i, j, k));
    return s;
}

struct EdgeKey {
    std::string src, dst;
    int label;
    Solidity sol;
    auto operator<=>(const EdgeKey&) const = default;
};

std::string dump(const std::set<EdgeKey>& s) {
    std::string out;
    for (const auto& e : s) out += e.src + " -" + std::to_string(e.label) + "-> " + e.dst + " " + solidity_str(e.sol) + "\n";
    return out;
}

EdgeKey key(const SmallRootGraph& g, const GraphEdge& e) {
    return {g.vertex_name(e.source), g.vertex_name(e.target), e.label, e.solidity};
}

// The four families of edges among Sigma_{<=2} and the negative vertex.
std::set<EdgeKey> rank2_families(const SmallRootGraph& g) {
    const CoxeterSystem& W = *g.sys;
    std::set<EdgeKey> out;
    auto name = [&](const RootVector& v) { return g.vertex_name(*g.vertex_of(v)); };
    int n = W.rank();
    for (int i = 0; i < n; ++i) {
        out.insert({name(simple_root(W, i)), "NEG", i, Solidity::Solid});
        for (int ip = 0; ip < n; ++ip) {
            if (ip == i || W.m(i, ip) == kInf) continue;
            int m = W.m(i, ip);
            for (int k = 1; k < m - 1; ++k)
                out.insert({name(rank2_root(W, i, ip, k)), name(rank2_root(W, i, ip, m - k)), i, Solidity::Solid});
            out.insert({name(simple_root(W, ip)), name(rank2_root(W, i, ip, 1)), i, Solidity::Dotted});
            for (int ipp = 0; ipp < n; ++ipp) {
                if (ipp == i || ipp == ip || W.m(i, ip) != 2 || W.m(i, ipp) != 2) continue;
                int mm = W.m(ip, ipp);
                if (mm == kInf || mm <= 2) continue;
                for (int k = 1; k < mm - 1; ++k) {
                    std::string v = name(rank2_root(W, ip, ipp, k));
                    out.insert({v, v, i, Solidity::Dotted});
                }
            }
        }
    }
    return out;
}

std::set<EdgeKey> induced_le2(const SmallRootGraph& g) {
    RootSet s = sigma_le2(*g.sys);
    std::set<EdgeKey> out;
    for (const auto& e : g.edges) {
        bool src = s.contains(g.roots.items()[static_cast<std::size_t>(e.source)]);
        bool dst = e.target == g.neg() || s.contains(g.roots.items()[static_cast<std::size_t>(e.target)]);
        if (src && dst) out.insert(key(g, e));
    }
    return out;
}

std::set<EdgeKey> extra_edges(const SmallRootGraph& g) {
    RootSet s = sigma_le2(*g.sys);
    std::set<EdgeKey> out;
    for (const auto& e : g.edges) {
        bool src = s.contains(g.roots.items()[static_cast<std::size_t>(e.source)]);
        bool dst = e.target == g.neg() || s.contains(g.roots.items()[static_cast<std::size_t>(e.target)]);
        if (!(src && dst)) out.insert(key(g, e));
    }
    return out;
}

}  // namespace

TEST_CASE("betwixt") {
    Word ord{0, 1, 2};
    CHECK(betwixt(ord, 0, 1, 2));
    CHECK_FALSE(betwixt(ord, 0, 0, 2));
    for (int i = 0; i < 3; ++i)
        for (int ip = 0; ip < 3; ++ip) CHECK(betwixt(ord, i, ip, i) == (ip != i));
    CHECK(betwixt(ord, 2, 0, 1));
    CHECK(betwixt(ord, 1, 2, 0));
    CHECK_FALSE(betwixt(ord, 2, 1, 0));
}

TEST_CASE("A1 graph") {
    auto W = type_A(1);
    SmallRootGraph g = build_graph(*W);
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].solidity == Solidity::Solid);
    CHECK(g.edges[0].target == g.neg());
}

TEST_CASE("right-angled graphs have only loops and edges to NEG") {
    std::vector<std::vector<std::pair<int, int>>> cases{{}, {{0, 1}}, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}, {0, 2}}};
    for (const auto& inf : cases)
        for (bool mu_big : {false, true}) {
            auto W = right_angled(3, inf);
            CoxeterSystem Wmu = *W;
            if (mu_big) {
                std::map<CoxeterSystem::Pair, Rational> mu;
                for (auto p : inf) mu[p] = Rational(3, 2);
                Wmu = CoxeterSystem(W->labels(), W->matrix(), mu);
            }
            SmallRootGraph g = build_graph(Wmu);
            CHECK(g.roots.size() == 3);
            CHECK(g.conflicts == 0);
            CHECK(g.unknown == 0);
            std::size_t loops = 0;
            for (const auto& e : g.edges) {
                if (e.target == g.neg()) {
                    CHECK(e.solidity == Solidity::Solid);
                    CHECK(g.roots.items()[static_cast<std::size_t>(e.source)] == simple_root(Wmu, e.label));
                } else {
                    CHECK(e.source == e.target);
                    CHECK(e.solidity == Solidity::Dotted);
                    CHECK(Wmu.m(e.label, e.source) == 2);
                    ++loops;
                }
            }
            CHECK(loops == 2 * (3 - inf.size()));
            for (const auto& ord : std::vector<Word>{{0, 1, 2}, {2, 0, 1}, {1, 0, 2}}) {
                CHECK(search_plausible_walks(g, ord, 24, false).walks.empty());
                CHECK(search_plausible_walks(g, ord, 24).walks.empty());
            }
        }
}

TEST_CASE("complete Coxeter graphs have Sigma = Sigma_{<=2}") {
    std::vector<int> labels{3, 4, 5};
    for (int a : labels)
        for (int b : labels)
            for (int c : labels) {
                auto W = make_system({"1", "2", "3"}, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
                SmallRootGraph g = build_graph(*W, {4, 3});
                CHECK(g.roots.size() == sigma_le2(*W).size());
                CHECK(g.conflicts == 0);
                CHECK(induced_le2(g) == rank2_families(g));
            }
    std::mt19937 rng(7);
    for (int t = 0; t < 12; ++t) {
        std::vector<std::tuple<int, int, int>> bonds;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) bonds.emplace_back(i, j, labels[rng() % 3]);
        auto W = make_system({"1", "2", "3", "4"}, bonds);
        SmallRootGraph g = build_graph(*W, {3, 2});
        CHECK(g.roots.size() == sigma_le2(*W).size());
        CHECK(g.conflicts == 0);
    }
}

TEST_CASE("G2 affine small roots") {
    auto W = affine_G2();
    SmallRootGraph g = build_graph(*W);
    Scalar r3 = two_cos(*W, 6), one(1), two(2), zero(0);
    for (auto v : {combo(*W, {zero, r3, one}), combo(*W, {r3, r3, one}), combo(*W, {r3, r3, two}),
                   combo(*W, {zero, r3, two})}) {
        CAPTURE(root_str(*W, v));
        CHECK(g.vertex_of(v).has_value());
    }
    CHECK(g.conflicts == 0);
    MESSAGE("G2: " << g.roots.size() << " vertices, " << g.edges.size() << " edges, " << g.unknown << " unknown");
    WalkSearchResult r = search_plausible_walks(g, W->parse_word("1,2,3"), 24);
    CHECK(r.walks.empty());
    CHECK_FALSE(r.truncated);
}

TEST_CASE("rank 3 (2,3,r) inventory") {
    for (int r : {7, 8, 9}) {
        CAPTURE(r);
        auto W = rank3(2, 3, r);
        SmallRootGraph g = build_graph(*W);
        CHECK(g.conflicts == 0);
        CHECK(g.unknown == 0);
        CHECK(g.roots.size() == sigma_le2(*W).size() + 3);
        Scalar c = two_cos(*W, r);
        auto a23 = [&](int k) { return rank2_root(*W, 1, 2, k); };
        RootVector X = add(simple_root(*W, 0), a23(r - 2));
        RootVector Y = add(scale(c, simple_root(*W, 0)), a23(1));
        RootVector Z = add(scale(c, simple_root(*W, 0)), a23(r - 3));
        auto nm = [&](const RootVector& v) {
            auto k = g.vertex_of(v);
            REQUIRE(k);
            return g.vertex_name(*k);
        };
        std::string a12 = nm(rank2_root(*W, 0, 1, 1));
        std::set<EdgeKey> expect{
            {nm(X), a12, 2, Solidity::Solid},          {a12, nm(X), 2, Solidity::Dotted},
            {nm(X), nm(a23(r - 2)), 0, Solidity::Solid}, {nm(a23(r - 2)), nm(X), 0, Solidity::Dotted},
            {nm(Y), nm(a23(1)), 0, Solidity::Solid},     {nm(a23(1)), nm(Y), 0, Solidity::Dotted},
            {nm(Z), nm(a23(r - 3)), 0, Solidity::Solid}, {nm(a23(r - 3)), nm(Z), 0, Solidity::Dotted},
            {nm(Z), nm(Y), 2, Solidity::Solid},          {nm(Y), nm(Z), 2, Solidity::Solid},
            {nm(Y), nm(Y), 1, Solidity::Solid}};
        CHECK_MESSAGE(extra_edges(g) == expect, dump(extra_edges(g)));
        CHECK(induced_le2(g) == rank2_families(g));
        if (r <= 8) {
            WalkSearchResult res = search_plausible_walks(g, W->parse_word("1,2,3"), 24);
            CHECK(res.walks.empty());
            CHECK_FALSE(res.truncated);
        }
    }
}

TEST_CASE("rank 3 (2,q,r) inventory") {
    for (auto [q, r] : std::vector<std::pair<int, int>>{{4, 4}, {4, 5}, {5, 6}}) {
        CAPTURE(q);
        CAPTURE(r);
        auto W = rank3(2, q, r);
        SmallRootGraph g = build_graph(*W);
        CHECK(g.conflicts == 0);
        CHECK(g.unknown == 0);
        CHECK(g.roots.size() == sigma_le2(*W).size() + 1);
        RootVector T = combo(*W, {two_cos(*W, q), Scalar(1), two_cos(*W, r)});
        auto nm = [&](const RootVector& v) {
            auto k = g.vertex_of(v);
            REQUIRE(k);
            return g.vertex_name(*k);
        };
        std::string t = nm(T), a23 = nm(rank2_root(*W, 1, 2, r - 2)), a12 = nm(rank2_root(*W, 0, 1, 1));
        std::set<EdgeKey> expect{{t, a23, 0, Solidity::Solid},
                                 {a23, t, 0, Solidity::Dotted},
                                 {t, a12, 2, Solidity::Solid},
                                 {a12, t, 2, Solidity::Dotted}};
        CHECK_MESSAGE(extra_edges(g) == expect, dump(extra_edges(g)));
        CHECK(induced_le2(g) == rank2_families(g));
        WalkSearchResult res = search_plausible_walks(g, W->parse_word("1,2,3"), 24);
        CHECK(res.walks.empty());
    }
}

TEST_CASE("D4 affine walks lift to a verified certificate") {
    Counterexample ex = d4_example();
    SmallRootGraph g = build_graph(*ex.sys);
    CHECK(g.conflicts == 0);
    MESSAGE("D4: " << g.roots.size() << " vertices, " << g.edges.size() << " edges, " << g.unknown << " unknown");
    WalkSearchResult r = search_plausible_walks(g, ex.ordering, 12);
    REQUIRE_FALSE(r.walks.empty());
    MESSAGE(r.walks.size() << " walks, first " << walk_str(g, r.walks.front()));
    std::optional<WalkCertificate> cert;
    for (const auto& w : r.walks) {
        CHECK(is_plausible(g, ex.ordering, w));
        if (!cert) cert = lift_walk(ex.sys, g, w, ex.ordering);
    }
    REQUIRE(cert);
    CHECK(verify_certificate(*cert).ok);
    WalkCertificate bad = *cert;
    bad.period -= 1;
    if (bad.period > 0) CHECK_FALSE(verify_certificate(bad).ok);

    // The D~4 example's own trajectory projects onto the graph.
    TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 10);
    Stratum st = stratum_of(ex.L, ex.u0, 5000);
    RootSet beta = transmitting_roots(ex.L, st);
    REQUIRE_FALSE(beta.empty());
    for (const auto& b : beta) CHECK(projects_to_graph(g, rec, b));
}

TEST_CASE("built-in certificates") {
    for (auto ex : {d4_example(), f4_example()}) {
        CAPTURE(ex.name);
        WalkCertificate c = certificate_of(ex);
        CHECK(verify_certificate(c).ok);
        WalkCertificate bad = c;
        bad.period -= 1;
        CHECK_FALSE(verify_certificate(bad).ok);
    }
}
