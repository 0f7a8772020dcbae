#include "bkb/suite.hpp"

#include "bkb/typea.hpp"
#include "bkb/walkgraph.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace bkb {

namespace {

CheckResult fail(const std::string& why) { return {false, why}; }

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

bool subset(const RootSet& a, const RootSet& b) {
    for (const auto& r : a)
        if (!b.contains(r)) return false;
    return true;
}

// Pro_c^k(u0) for k = 1..period; returns the first k with a return, or 0.
int first_return(const Counterexample& ex, int limit) {
    GroupElement u = ex.u0;
    for (int k = 1; k <= limit; ++k) {
        u = pro_c(ex.L, ex.ordering, u);
        if (u == ex.u0) return k;
    }
    return 0;
}

struct Pool {
    std::string name;
    SystemPtr sys;
    std::vector<GroupElement> elements;  // the whole group, or a ball for infinite W
    bool finite = true;
};

std::vector<Pool> property_pools() {
    std::vector<Pool> out;
    for (auto [name, sp] : std::vector<std::pair<std::string, SystemPtr>>{
             {"A2", type_A(2)}, {"A3", type_A(3)}, {"B2", type_B(2)}, {"B3", type_B(3)}, {"H3", type_H3()},
             {"I2(5)", dihedral(5)}})
        out.push_back({name, sp, enumerate_group(*sp), true});
    SystemPtr a2 = affine_A(2);
    out.push_back({"A~2", a2, ball(*a2, 4), false});
    return out;
}

template <class Rng>
const GroupElement& pick(const std::vector<GroupElement>& v, Rng& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

template <class Rng>
ConvexSet random_hull(const CoxeterSystem& sys, const std::vector<GroupElement>& pool, Rng& rng, int max_gens = 3) {
    int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
    std::vector<GroupElement> gens;
    for (int t = 0; t < k; ++t) gens.push_back(pick(pool, rng));
    return ConvexSet::hull(sys, gens);
}

template <class Rng>
Word random_word(const CoxeterSystem& sys, int len, Rng& rng) {
    Word w;
    for (int t = 0; t < len; ++t) w.push_back(std::uniform_int_distribution<int>(0, sys.rank() - 1)(rng));
    return w;
}

std::vector<Word> coxeter_words(const CoxeterSystem& sys) {
    std::vector<Word> out;
    std::set<Word> classes;
    Word p(static_cast<std::size_t>(sys.rank()));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (classes.insert(commutation_canonical(sys, p)).second) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Orderings with one colour class of a bipartite Coxeter graph first.
Word bipartite_word(const CoxeterSystem& sys) {
    std::vector<int> colour(static_cast<std::size_t>(sys.rank()), -1);
    for (int s = 0; s < sys.rank(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < sys.rank(); ++w)
                if (sys.is_edge(v, w) && colour[static_cast<std::size_t>(w)] < 0) {
                    colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                }
        }
    }
    Word c;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < sys.rank(); ++i)
            if (colour[static_cast<std::size_t>(i)] == pass) c.push_back(i);
    return c;
}

std::vector<std::pair<std::string, SystemPtr>> sorting_groups() {
    return {{"A2", type_A(2)}, {"A3", type_A(3)}, {"B2", type_B(2)}, {"B3", type_B(3)},
            {"H3", type_H3()}, {"I2(5)", dihedral(5)}, {"I2(7)", dihedral(7)}};
}

// Sigma_{<=2}: simple roots and interior roots of finite rank-2 parabolics.
RootSet sigma_le2(const CoxeterSystem& W) {
    RootSet s;
    for (int i = 0; i < W.rank(); ++i) s.insert(simple_root(W, i));
    for (int i = 0; i < W.rank(); ++i)
        for (int j = 0; j < W.rank(); ++j)
            if (i != j && W.m(i, j) != kInf)
                for (int k = 1; k < W.m(i, j) - 1; ++k) s.insert(rank2_root(W, i, j, k));
    return s;
}

bool same_roots(const RootSet& a, const RootSet& b) { return a.size() == b.size() && subset(a, b); }

using EdgeKey = std::tuple<std::string, std::string, int, Solidity>;

std::set<EdgeKey> extra_edges(const SmallRootGraph& g) {
    RootSet s = sigma_le2(*g.sys);
    std::set<EdgeKey> out;
    for (const auto& e : g.edges) {
        bool src = s.contains(g.roots.items()[static_cast<std::size_t>(e.source)]);
        bool dst = e.target == g.neg() || s.contains(g.roots.items()[static_cast<std::size_t>(e.target)]);
        if (!(src && dst)) out.insert({g.vertex_name(e.source), g.vertex_name(e.target), e.label, e.solidity});
    }
    return out;
}

std::optional<std::string> vertex(const SmallRootGraph& g, const RootVector& v) {
    auto k = g.vertex_of(v);
    if (!k) return std::nullopt;
    return g.vertex_name(*k);
}

Scalar two_cos(const CoxeterSystem& W, int m) { return cos_pi_over(m, W.field()) * Scalar(2); }

// Extra vertices and edges of the (2,3,r) graph: X, Y, Z adjoined to Sigma_{<=2}.
std::optional<std::string> check_23r(int r) {
    auto W = rank3(2, 3, r);
    SmallRootGraph g = build_graph(*W);
    if (g.conflicts || g.unknown) return "unresolved edges";
    if (g.roots.size() != sigma_le2(*W).size() + 3) return "vertex count " + std::to_string(g.roots.size());
    auto a23 = [&](int k) { return rank2_root(*W, 1, 2, k); };
    Scalar c = two_cos(*W, r);
    RootVector X = add(simple_root(*W, 0), a23(r - 2));
    RootVector Y = add(scale(c, simple_root(*W, 0)), a23(1));
    RootVector Z = add(scale(c, simple_root(*W, 0)), a23(r - 3));
    auto x = vertex(g, X), y = vertex(g, Y), z = vertex(g, Z), a12 = vertex(g, rank2_root(*W, 0, 1, 1));
    auto p = vertex(g, a23(r - 2)), q = vertex(g, a23(1)), t = vertex(g, a23(r - 3));
    if (!x || !y || !z || !a12 || !p || !q || !t) return "missing vertex";
    std::set<EdgeKey> expect{{*x, *a12, 2, Solidity::Solid}, {*a12, *x, 2, Solidity::Dotted},
                             {*x, *p, 0, Solidity::Solid},   {*p, *x, 0, Solidity::Dotted},
                             {*y, *q, 0, Solidity::Solid},   {*q, *y, 0, Solidity::Dotted},
                             {*z, *t, 0, Solidity::Solid},   {*t, *z, 0, Solidity::Dotted},
                             {*z, *y, 2, Solidity::Solid},   {*y, *z, 2, Solidity::Solid},
                             {*y, *y, 1, Solidity::Solid}};
    if (extra_edges(g) != expect) return "extra edges differ";
    return std::nullopt;
}

// The (2,q,r) graph with q, r >= 4 adjoins a single vertex.
std::optional<std::string> check_2qr(int q, int r) {
    auto W = rank3(2, q, r);
    SmallRootGraph g = build_graph(*W);
    if (g.conflicts || g.unknown) return "unresolved edges";
    if (g.roots.size() != sigma_le2(*W).size() + 1) return "vertex count " + std::to_string(g.roots.size());
    RootVector T = zero_vector(*W);
    T[0] = two_cos(*W, q);
    T[1] = Scalar(1);
    T[2] = two_cos(*W, r);
    auto t = vertex(g, T), a23 = vertex(g, rank2_root(*W, 1, 2, r - 2)), a12 = vertex(g, rank2_root(*W, 0, 1, 1));
    if (!t || !a23 || !a12) return "missing vertex";
    std::set<EdgeKey> expect{{*t, *a23, 0, Solidity::Solid},
                             {*a23, *t, 0, Solidity::Dotted},
                             {*t, *a12, 2, Solidity::Solid},
                             {*a12, *t, 2, Solidity::Dotted}};
    if (extra_edges(g) != expect) return "extra edges differ";
    return std::nullopt;
}

// Map an element of W_J to the parabolic system (J sorted) and back.
GroupElement to_parabolic(const CoxeterSystem& P, const std::vector<int>& J, const GroupElement& u) {
    Word w;
    for (int i : reduced_word(u)) w.push_back(static_cast<int>(std::find(J.begin(), J.end(), i) - J.begin()));
    return element_of(P, w);
}

GroupElement from_parabolic(const CoxeterSystem& W, const std::vector<int>& J, const GroupElement& v) {
    Word w;
    for (int k : reduced_word(v)) w.push_back(J[static_cast<std::size_t>(k)]);
    return element_of(W, w);
}

}  // namespace

CheckResult check_d4(const Counterexample& ex) {
    const CoxeterSystem& W = *ex.sys;
    TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 10, false);
    std::vector<std::vector<std::string>> table{{"0"}, {"1", "0"}, {"1", "0"}, {"3", "1", "0"}, {"4", "3", "1", "0"},
                                                {"4", "3", "1"}, {"4", "3"}, {"4", "3"}, {"4"}, {}};
    if (rec.steps.size() != table.size()) return fail("trajectory has " + std::to_string(rec.steps.size()) + " steps");
    for (std::size_t k = 0; k < table.size(); ++k) {
        bool reflect = (k == 2 || k == 7);
        const auto& st = rec.steps[k];
        if (st.after != product(W, table[k]) || (st.action == Action::Reflect) != reflect)
            return fail("table differs at step " + std::to_string(k + 1));
    }
    if (ex.L.contains(ex.u0)) return fail("start lies in L");
    if (first_return(ex, 2) != 2) return fail("Pro^2(1) != 1 or earlier return");
    return {true, "10 steps match; 1 not in L; Pro^2(1) = 1"};
}

CheckResult check_returns(const Counterexample& ex) {
    if (ex.L.contains(ex.u0)) return fail(ex.name + ": start lies in L");
    int k = first_return(ex, ex.period);
    if (k != ex.period)
        return fail(ex.name + ": " + (k ? "returns after " + std::to_string(k) : "no return within " + std::to_string(ex.period)));
    return {true, ex.name + ": 1 not in L; minimal return " + std::to_string(k)};
}

CheckResult check_family_B(const std::vector<int>& ns, const std::vector<std::pair<int, int>>& bb) {
    int count = 0;
    for (int n : ns)
        for (auto [b, bp] : bb) {
            Counterexample ex = family_B_example(n, b, bp);
            if (ex.period != 2 * n - 2) return fail(ex.name + ": wrong claimed period");
            GroupElement u = ex.u0;
            for (int k = 0; k < ex.period; ++k) u = pro_c(ex.L, ex.ordering, u);
            if (u != ex.u0) return fail(ex.name + ": Pro^{2n-2}(1) != 1");
            SeparatorSet sep = separators(ex.L, ex.u0);
            if (sep.roots.empty() || !sep.complete) return fail(ex.name + ": Sep(1) empty");
            for (auto [name, ok] : family_B_identities(n, b, bp))
                if (!ok) return fail(ex.name + ": " + name + " fails");
            ++count;
        }
    return {true, std::to_string(count) + " systems: Pro^{2n-2}(1) = 1, Sep(1) nonempty, identities hold"};
}

CheckResult check_family_D(const std::vector<int>& ns, const std::vector<int>& labels) {
    int count = 0;
    for (int n : ns)
        for (int a : labels)
            for (int ap : labels)
                for (int b : labels)
                    for (int bp : labels) {
                        Counterexample ex = family_D_example(n, a, ap, b, bp);
                        GroupElement u = ex.u0;
                        for (int k = 0; k < n - 1; ++k) u = pro_c(ex.L, ex.ordering, u);
                        if (u != ex.u0) return fail(ex.name + ": Pro^{n-1}(1) != 1");
                        if (ex.L.contains(ex.u0)) return fail(ex.name + ": start lies in L");
                        ++count;
                    }
    return {true, std::to_string(count) + " systems: Pro^{n-1}(1) = 1"};
}

CheckResult check_long_word_sorting(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> notes;
    for (auto [name, sp] : sorting_groups()) {
        const CoxeterSystem& W = *sp;
        auto elems = enumerate_group(W);
        std::vector<Word> all = all_reduced_words(long_element(W), 5000);
        // one word per commutation class first, then fill up
        std::vector<Word> words;
        std::set<Word> classes;
        for (const auto& w : all)
            if (words.size() < 5 && classes.insert(commutation_canonical(W, w)).second) words.push_back(w);
        for (const auto& w : all)
            if (words.size() < 5 && std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
        if (words.size() < std::min<std::size_t>(5, all.size())) return fail(name + ": too few words");
        for (int t = 0; t < 20; ++t) {
            ConvexSet L = random_hull(W, elems, rng);
            for (const auto& w : words)
                if (!sort_check(L, w)) return fail(name + ": " + W.word_str(w) + " does not sort a random hull");
        }
        notes.push_back(name + " " + std::to_string(words.size()) + " words/" + std::to_string(classes.size()) +
                        " classes");
    }
    return {true, join(notes)};
}

CheckResult check_coxeter_sorting(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> notes;
    for (auto [name, sp] : sorting_groups()) {
        const CoxeterSystem& W = *sp;
        auto elems = enumerate_group(W);
        GroupElement w0 = long_element(W);
        ConvexSet top = ConvexSet::hull(W, {w0});
        std::vector<Word> cs = coxeter_words(W);
        for (const auto& c : cs) {
            int M = m_of_c(W, c);
            for (int t = 0; t < 5; ++t) {
                ConvexSet L = random_hull(W, elems, rng);
                if (!sort_check(L, repeat_word(c, M))) return fail(name + " c=" + W.word_str(c) + ": Pro^M does not sort");
            }
            if (!sort_check(top, repeat_word(c, M))) return fail(name + " c=" + W.word_str(c) + ": {w0} not sorted at M");
            if (M > 0 && sort_check(top, repeat_word(c, M - 1)))
                return fail(name + " c=" + W.word_str(c) + ": {w0} already sorted at M-1");
        }
        notes.push_back(name + " " + std::to_string(cs.size()) + " classes");
    }
    auto S7 = type_A(6);
    int m7 = m_of_c(*S7, S7->parse_word("6,5,4,3,1,2"));
    if (m7 != 5) return fail("S7 example gives M(c) = " + std::to_string(m7));
    std::vector<std::pair<SystemPtr, int>> cox;
    for (int n = 1; n <= 5; ++n) cox.emplace_back(type_A(n), n + 1);
    cox.emplace_back(type_B(3), 6);
    cox.emplace_back(type_H3(), 10);
    for (auto [sp, h] : cox) {
        int M = m_of_c(*sp, bipartite_word(*sp));
        if (M != (h + 1) / 2) return fail("bipartite M(c) = " + std::to_string(M) + " for h = " + std::to_string(h));
    }
    notes.push_back("S7 M(c)=5; bipartite M(c)=ceil(h/2)");
    return {true, join(notes)};
}

CheckResult check_typeA_identities(unsigned seed) {
    std::mt19937 rng(seed);
    auto sorts = [](const Poset& P, auto&& f) {
        int size = P.size;
        std::set<Perm> image;
        for (const auto& u : all_perms(size)) image.insert(f(u));
        auto ext = linear_extensions(P);
        return image == std::set<Perm>(ext.begin(), ext.end());
    };
    auto check_one = [&](const Poset& P) -> std::optional<std::string> {
        int n = P.size - 1;
        int k = (n + 2) / 2;
        if (!sorts(P, [&](Perm u) {
                for (int t = 0; t < n; ++t) u = typeA_pro(P, u);
                return u;
            }))
            return "Pro^n";
        if (!sorts(P, [&](const Perm& u) { return typeA_ev(P, u); })) return "Ev";
        if (!sorts(P, [&](Perm u) {
                for (int t = 0; t < k; ++t) u = typeA_gyr(P, u);
                return u;
            }))
            return "Gyr";
        return std::nullopt;
    };
    int checked = 0;
    std::map<int, int> witnesses;  // poset size -> posets where one fewer gyration does not sort
    for (int size = 1; size <= 4; ++size)
        for (const auto& P : all_posets(size)) {
            if (auto bad = check_one(P)) return fail(*bad + " does not sort a poset on " + std::to_string(size));
            int k = (size + 1) / 2;
            if (size > 1 && !sorts(P, [&](Perm u) {
                    for (int t = 0; t < k - 1; ++t) u = typeA_gyr(P, u);
                    return u;
                }))
                ++witnesses[size];
            ++checked;
        }
    for (int t = 0; t < 50; ++t) {
        Poset P = random_poset(5, rng);
        if (auto bad = check_one(P)) return fail(*bad + " does not sort a random poset on 5");
        ++checked;
    }
    for (int size = 2; size <= 4; ++size)
        if (!witnesses[size]) return fail("no tightness witness for Gyr on " + std::to_string(size) + " elements");
    // The reversed chain on 5 elements starting from the identity labelling.
    std::vector<std::pair<int, int>> rev;
    for (int a = 0; a + 1 < 5; ++a) rev.emplace_back(a + 1, a);
    Poset R = Poset::from_pairs(5, rev);
    Perm u{0, 1, 2, 3, 4};
    for (int t = 0; t < 2; ++t) u = typeA_gyr(R, u);
    if (is_linear_extension(R, u)) return fail("reversed 5-chain sorted by two gyrations");
    return {true, std::to_string(checked) + " posets sort; Gyr tightness witnesses on 2..5 elements"};
}

CheckResult check_typeA_correspondence() {
    std::size_t count = 0;
    for (int n = 1; n <= 3; ++n) {
        auto W = type_A(n);
        for (const auto& P : all_posets(n + 1)) {
            ConvexSet L = convex_from_poset(*W, P);
            if (!(poset_from_convex(L) == P)) return fail("poset round trip fails");
            for (const auto& u : all_perms(n + 1)) {
                GroupElement g = element_of_perm(*W, u);
                for (int i = 0; i < n; ++i) {
                    if (perm_of_element(toggle(L, i, g)) != typeA_bk(P, i, u)) return fail("toggle mismatch");
                    ++count;
                }
            }
        }
    }
    return {true, std::to_string(count) + " toggles agree"};
}

CheckResult check_small_roots() {
    std::vector<std::string> notes;
    // right-angled: every subset of pairs on 3 and 4 generators
    int ra = 0;
    for (int n : {3, 4}) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> inf;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1u) inf.push_back(pairs[k]);
            auto W = right_angled(n, inf);
            RootSet simples;
            for (int i = 0; i < n; ++i) simples.insert(simple_root(*W, i));
            if (!same_roots(small_roots(*W), simples)) return fail("right-angled system with extra small roots");
            ++ra;
        }
    }
    notes.push_back(std::to_string(ra) + " right-angled");
    int complete = 0;
    std::vector<int> labels{3, 4, 5};
    for (int a : labels)
        for (int b : labels)
            for (int c : labels) {
                auto W = make_system({"1", "2", "3"}, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
                if (!same_roots(small_roots(*W), sigma_le2(*W))) return fail("complete 3-vertex graph differs");
                ++complete;
            }
    std::vector<int> e(6, 0);
    for (int code = 0; code < 729; ++code) {
        int x = code;
        for (auto& v : e) {
            v = labels[static_cast<std::size_t>(x % 3)];
            x /= 3;
        }
        auto W = make_system({"1", "2", "3", "4"},
                             {{0, 1, e[0]}, {0, 2, e[1]}, {0, 3, e[2]}, {1, 2, e[3]}, {1, 3, e[4]}, {2, 3, e[5]}});
        if (!same_roots(small_roots(*W), sigma_le2(*W))) return fail("complete 4-vertex graph differs");
        ++complete;
    }
    notes.push_back(std::to_string(complete) + " complete");
    {
        auto W = affine_G2();
        RootSet sigma = small_roots(*W);
        Scalar r3 = two_cos(*W, 6), one(1), two(2), zero(0);
        for (auto c : std::vector<std::vector<Scalar>>{{zero, r3, one}, {r3, r3, one}, {r3, r3, two}, {zero, r3, two}}) {
            RootVector v = zero_vector(*W);
            for (std::size_t k = 0; k < 3; ++k) v[k] = c[k];
            if (!sigma.contains(v)) return fail("G~2 missing " + root_str(*W, v));
        }
        notes.push_back("G~2 four roots");
    }
    for (int r : {7, 8})
        if (auto bad = check_23r(r)) return fail("(2,3," + std::to_string(r) + "): " + *bad);
    if (auto bad = check_2qr(4, 5)) return fail("(2,4,5): " + *bad);
    notes.push_back("(2,3,7) (2,3,8) (2,4,5) inventories");
    return {true, join(notes)};
}

CheckResult check_walk_negatives() {
    std::vector<std::string> notes;
    {
        auto W = affine_G2();
        auto res = search_plausible_walks(build_graph(*W), W->parse_word("1,2,3"), 24);
        if (!res.walks.empty() || res.truncated) return fail("G~2 has a plausible walk");
        notes.push_back("G~2 none");
    }
    int ra = 0;
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<std::pair<int, int>> inf;
        for (std::size_t k = 0; k < 3; ++k)
            if (mask >> k & 1u) inf.push_back(pairs[k]);
        auto W = right_angled(3, inf);
        SmallRootGraph g = build_graph(*W);
        Word p{0, 1, 2};
        do {
            auto res = search_plausible_walks(g, p, 24);
            if (!res.walks.empty() || res.truncated) return fail("right-angled system has a plausible walk");
            ++ra;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    notes.push_back(std::to_string(ra) + " right-angled cases none");
    {
        auto W = rank3(2, 3, 7);
        auto res = search_plausible_walks(build_graph(*W), W->parse_word("1,2,3"), 24);
        if (!res.walks.empty() || res.truncated) return fail("(2,3,7) has a plausible walk");
        notes.push_back("(2,3,7) none");
    }
    {
        Counterexample ex = d4_example();
        SmallRootGraph g = build_graph(*ex.sys);
        auto res = search_plausible_walks(g, ex.ordering, 24, true, 50);
        if (res.walks.empty()) return fail("D~4 has no plausible walk");
        std::optional<WalkCertificate> cert;
        for (const auto& w : res.walks)
            if ((cert = lift_walk(ex.sys, g, w, ex.ordering))) break;
        if (!cert) return fail("no D~4 walk lifts");
        CertificateCheck chk = verify_certificate(*cert);
        if (!chk.ok) return fail("D~4 certificate: " + chk.message);
        notes.push_back("D~4 lifted period " + std::to_string(cert->period));
    }
    return {true, join(notes)};
}

CheckResult check_properties(unsigned seed, int cases) {
    std::mt19937 rng(seed);
    std::vector<Pool> pools = property_pools();
    std::vector<const Pool*> finite;
    for (const auto& p : pools)
        if (p.finite) finite.push_back(&p);
    auto any_pool = [&]() -> const Pool& { return pools[rng() % pools.size()]; };
    auto finite_pool = [&]() -> const Pool& { return *finite[rng() % finite.size()]; };
    auto gen = [&](const CoxeterSystem& W) { return std::uniform_int_distribution<int>(0, W.rank() - 1)(rng); };
    std::vector<std::string> notes;
    auto t0 = std::chrono::steady_clock::now();
    auto done = [&](const std::string& name, long n) {
        auto t1 = std::chrono::steady_clock::now();
        char secs[32];
        std::snprintf(secs, sizeof secs, " (%.1fs)", std::chrono::duration<double>(t1 - t0).count());
        t0 = t1;
        notes.push_back(name + " " + std::to_string(n) + secs);
    };

    for (int t = 0; t < cases; ++t) {
        const Pool& p = any_pool();
        const CoxeterSystem& W = *p.sys;
        ConvexSet L = random_hull(W, p.elements, rng);
        GroupElement u = pick(p.elements, rng);
        int i = gen(W);
        GroupElement v = toggle(L, i, u);
        RootSet su = separators(L, u).roots;
        if (!subset(separators(L, v).roots, su)) return fail("Sep monotonicity fails in " + p.name);
        bool branch = subset(separators(L, u.left_mul(i)).roots, su);
        if ((v == u.left_mul(i)) != branch) return fail("branch rule fails in " + p.name);
    }
    done("Sep-monotone+branch", cases);

    for (int t = 0; t < cases; ++t) {
        const Pool& p = any_pool();
        const CoxeterSystem& W = *p.sys;
        ConvexSet L = random_hull(W, p.elements, rng);
        GroupElement w = pick(p.elements, rng);
        Word word = reduced_word(w);
        GroupElement v = apply_toggle_word(L, word, pick(p.elements, rng));
        if (!subset(separators(L, v).roots, separators(L, w.inverse() * v).roots))
            return fail("Sep containment fails in " + p.name);
    }
    done("Sep-containment", cases);

    long invol = 0;
    for (int t = 0; t < cases; ++t) {
        const Pool& p = any_pool();
        const CoxeterSystem& W = *p.sys;
        ConvexSet L = random_hull(W, p.elements, rng);
        auto members = hull_expand(W, L.generators());
        ElementSet in(members.begin(), members.end());
        int i = gen(W);
        ElementSet image;
        for (const auto& x : members) {
            GroupElement y = toggle(L, i, x);
            if (!in.count(y) || toggle(L, i, y) != x) return fail("tau_i on L is not an involution in " + p.name);
            image.insert(y);
            ++invol;
        }
        if (image.size() != members.size()) return fail("tau_i on L is not a bijection in " + p.name);
    }
    done("tau_i|L involution over " + std::to_string(invol) + " elements", cases);

    for (int t = 0; t < cases; ++t) {
        const Pool& p = any_pool();
        ConvexSet L = random_hull(*p.sys, p.elements, rng);
        GroupElement u = pick(p.elements, rng);
        int i = gen(*p.sys);
        GroupElement once = toggle(L, i, u), twice = toggle(L, i, once);
        if (twice != u && twice != once) return fail("tau_i^2 pattern fails in " + p.name);
    }
    done("tau_i^2 pattern", cases);

    for (int t = 0; t < cases; ++t) {
        const Pool& p = any_pool();
        const CoxeterSystem& W = *p.sys;
        ConvexSet L = random_hull(W, p.elements, rng);
        Word word = random_word(W, std::uniform_int_distribution<int>(1, 10)(rng), rng);
        Word moved = word;
        for (int k = 0; k < 6 && moved.size() > 1; ++k) {
            std::size_t at = rng() % (moved.size() - 1);
            if (moved[at] != moved[at + 1] && W.m(moved[at], moved[at + 1]) == 2) std::swap(moved[at], moved[at + 1]);
        }
        GroupElement u = pick(p.elements, rng);
        GroupElement a = apply_toggle_word(L, word, u);
        if (a != apply_toggle_word(L, moved, u) || a != apply_toggle_word(L, commutation_canonical(W, word), u))
            return fail("commutation invariance fails in " + p.name);
    }
    done("commutation invariance", cases);

    for (int t = 0; t < cases; ++t) {
        const Pool& p = finite_pool();
        const CoxeterSystem& W = *p.sys;
        std::vector<GroupElement> K;
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int j = 0; j < k; ++j) K.push_back(pick(p.elements, rng));
        auto hull = hull_expand(W, K);
        ElementSet got(hull.begin(), hull.end());
        // every half-space containing K, intersected over the enumerated group
        std::vector<std::pair<RootVector, int>> spaces;
        for (const auto& beta : positive_roots(W, 64)) {
            int s0 = leading_sign(K[0].act(beta));
            bool same = true;
            for (const auto& g : K) same = same && leading_sign(g.act(beta)) == s0;
            if (same) spaces.emplace_back(beta, s0);
        }
        std::size_t brute = 0;
        for (const auto& w : p.elements) {
            bool inside = true;
            for (const auto& [beta, s0] : spaces) inside = inside && leading_sign(w.act(beta)) == s0;
            if (inside) {
                ++brute;
                if (!got.count(w)) return fail("hull misses a half-space element in " + p.name);
            }
        }
        if (brute != got.size()) return fail("hull has extra elements in " + p.name);
    }
    done("hull = half-space hull", cases);

    for (int t = 0; t < cases; ++t) {
        const Pool& p = any_pool();
        const CoxeterSystem& W = *p.sys;
        std::vector<int> J;
        while (J.empty() || static_cast<int>(J.size()) == W.rank()) {
            J.clear();
            for (int i = 0; i < W.rank(); ++i)
                if (rng() & 1u) J.push_back(i);
        }
        CoxeterSystem P = parabolic(W, J);
        auto in_J = [&](int len) {
            Word w;
            for (int k = 0; k < len; ++k) w.push_back(J[rng() % J.size()]);
            return element_of(W, w);
        };
        std::vector<GroupElement> K;
        for (int k = 0, n = 1 + static_cast<int>(rng() % 3); k < n; ++k) K.push_back(in_J(static_cast<int>(rng() % 6)));
        ConvexSet L = ConvexSet::hull(W, K);
        std::vector<GroupElement> KP;
        for (const auto& g : K) KP.push_back(to_parabolic(P, J, g));
        ConvexSet LP = ConvexSet::hull(P, KP);
        GroupElement u = in_J(static_cast<int>(rng() % 8));
        int i = gen(W);
        GroupElement v = toggle(L, i, u);
        auto pos = std::find(J.begin(), J.end(), i);
        if (pos == J.end()) {
            if (v != u) return fail("toggle outside J moves W_J in " + p.name);
        } else {
            int ip = static_cast<int>(pos - J.begin());
            if (v != from_parabolic(W, J, toggle(LP, ip, to_parabolic(P, J, u))))
                return fail("parabolic toggle mismatch in " + p.name);
        }
    }
    done("parabolic restriction", cases);

    {
        auto E6 = affine_E6();
        FoldingMap fm = fold(*E6, {0, 6, 2, 5, 4, 3, 1});
        const CoxeterSystem& F = fm.folded;
        auto fball = ball(F, 3);
        auto iota = [&](const GroupElement& x) { return element_of(*E6, fm.iota(reduced_word(x))); };
        long n = 0;
        for (int t = 0; n < cases; ++t) {
            ConvexSet Lf = random_hull(F, fball, rng, 2);
            std::vector<GroupElement> lifted;
            for (const auto& g : Lf.generators()) lifted.push_back(iota(g));
            ConvexSet L = ConvexSet::hull(*E6, lifted);
            for (int s = 0; s < 20; ++s, ++n) {
                GroupElement x = pick(fball, rng);
                int o = gen(F);
                GroupElement lhs = iota(toggle(Lf, o, x));
                GroupElement rhs = apply_toggle_word(L, fm.orbits[static_cast<std::size_t>(o)], iota(x));
                if (lhs != rhs) return fail("folding equivariance fails");
            }
        }
        done("folding E~6->F~4", n);
    }

    {
        long n = 0;
        std::vector<Counterexample> orbits{d4_example()};
        for (int n = 3; n <= 5; ++n) {
            orbits.push_back(family_B_example(n, 3, 3));
            orbits.push_back(family_D_example(n, 3, 3, 3, 3));
        }
        for (const auto& ex : orbits) {
            TrajectoryRecord rec = run_trajectory(ex.L, ex.ordering, ex.u0, 400);
            if (!rec.period) return fail(ex.name + ": no period");
            Stratum st = stratum_of(ex.L, ex.u0, 5000);
            RootSet betas = transmitting_roots(ex.L, st);
            if (betas.empty()) return fail(ex.name + ": no transmitting root");
            const CoxeterSystem& W = *ex.sys;
            GroupElement prev = ex.u0;
            for (const auto& step : rec.steps) {
                if (step.action == Action::Reflect)
                    for (const auto& b : betas) {
                        if (!bilinear_simple(W, prev.act(b), step.label).is_zero())
                            return fail(ex.name + ": orthogonality fails at step " + std::to_string(step.index));
                        ++n;
                    }
                prev = step.after;
            }
        }
        done("orthogonality on D~4 and family orbits", n);
    }
    return {true, join(notes)};
}

std::vector<SuiteCheck> acceptance_checks() {
    return {
        {1, "D~4 counterexample", [] { return check_d4(d4_example()); }},
        {2, "F~4 counterexample", [] { return check_returns(f4_example()); }},
        {3, "E~8 counterexample", [] { return check_returns(e8_example()); }},
        {4, "B~ family", [] { return check_family_B({3, 4, 5}, {{3, 3}, {4, 3}, {4, 4}}); }},
        {5, "D~ family", [] { return check_family_D({3, 4, 5}, {3, 4}); }},
        {6, "long-element sorting", [] { return check_long_word_sorting(6); }},
        {7, "Coxeter-element sorting and M(c)", [] { return check_coxeter_sorting(7); }},
        {8, "type-A sorting identities", [] { return check_typeA_identities(8); }},
        {9, "type-A toggle correspondence", [] { return check_typeA_correspondence(); }},
        {10, "small-root suites", [] { return check_small_roots(); }},
        {11, "walk-search negatives", [] { return check_walk_negatives(); }},
        {12, "property suites", [] { return check_properties(12, 1000); }},
    };
}

}  // namespace bkb
