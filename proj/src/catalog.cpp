#include "bkb/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkb {

namespace {

std::vector<std::string> numbered(int from, int to) {
    std::vector<std::string> out;
    for (int k = from; k <= to; ++k) out.push_back(std::to_string(k));
    return out;
}

std::string s(int k) { return std::to_string(k); }

// z_j = (s_j s_{j+1})(s_{j-1} s_j) ... (s_1 s_2)
std::vector<std::string> z_word(int j) {
    std::vector<std::string> w;
    for (int k = j; k >= 1; --k) {
        w.push_back(s(k));
        w.push_back(s(k + 1));
    }
    return w;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// s_from s_{from-1} ... s_to, skipping letters listed in skip (left to right)
std::vector<std::string> descending(int from, int to) {
    std::vector<std::string> w;
    for (int k = from; k >= to; --k) w.push_back(s(k));
    return w;
}

}  // namespace

SystemPtr make_system(std::vector<std::string> labels, const std::vector<std::tuple<int, int, int>>& bonds) {
    std::size_t n = labels.size();
    std::vector<std::vector<int>> M(n, std::vector<int>(n, 2));
    for (std::size_t i = 0; i < n; ++i) M[i][i] = 1;
    for (auto [i, j, m] : bonds) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n || i == j)
            throw std::invalid_argument("bond outside the label range");
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
        M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m;
    }
    return std::make_shared<const CoxeterSystem>(std::move(labels), M);
}

SystemPtr type_A(int n) {
    std::vector<std::tuple<int, int, int>> b;
    for (int i = 0; i + 1 < n; ++i) b.emplace_back(i, i + 1, 3);
    return make_system(numbered(1, n), b);
}

SystemPtr type_B(int n) {
    std::vector<std::tuple<int, int, int>> b;
    for (int i = 0; i + 1 < n; ++i) b.emplace_back(i, i + 1, i == 0 ? 4 : 3);
    return make_system(numbered(1, n), b);
}

SystemPtr type_H3() { return make_system(numbered(1, 3), {{0, 1, 5}, {1, 2, 3}}); }

SystemPtr dihedral(int m) { return make_system(numbered(1, 2), {{0, 1, m}}); }

SystemPtr affine_A(int n) {
    if (n == 1) return make_system(numbered(0, 1), {{0, 1, kInf}});
    std::vector<std::tuple<int, int, int>> b;
    for (int i = 0; i <= n; ++i) b.emplace_back(i, (i + 1) % (n + 1), 3);
    return make_system(numbered(0, n), b);
}

SystemPtr affine_C(int n) {
    std::vector<std::tuple<int, int, int>> b;
    for (int i = 0; i < n; ++i) b.emplace_back(i, i + 1, (i == 0 || i == n - 1) ? 4 : 3);
    return make_system(numbered(0, n), b);
}

SystemPtr affine_G2() { return make_system(numbered(1, 3), {{0, 1, 3}, {1, 2, 6}}); }

SystemPtr affine_D4() { return make_system(numbered(0, 4), {{0, 2, 3}, {1, 2, 3}, {3, 2, 3}, {4, 2, 3}}); }

SystemPtr affine_F4() { return make_system(numbered(0, 4), {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}}); }

SystemPtr affine_E6() {
    return make_system(numbered(0, 6), {{1, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {2, 4, 3}, {0, 2, 3}});
}

SystemPtr affine_E8() {
    return make_system(numbered(0, 8),
                       {{1, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {6, 7, 3}, {7, 8, 3}, {2, 4, 3}, {0, 8, 3}});
}

SystemPtr family_B(int n, int b, int bp) {
    if (n < 3) throw std::invalid_argument("family_B needs n >= 3");
    std::vector<std::tuple<int, int, int>> bonds{{0, 1, 4}};
    for (int k = 1; k + 1 <= n - 2; ++k) bonds.emplace_back(k, k + 1, 3);
    bonds.emplace_back(n - 2, n - 1, b);
    bonds.emplace_back(n - 2, n, bp);
    return make_system(numbered(0, n), bonds);
}

SystemPtr family_D(int n, int a, int ap, int b, int bp) {
    if (n < 3) throw std::invalid_argument("family_D needs n >= 3");
    // indices: 0 -> "0", 1 -> "0'", k+1 -> "k" for k >= 1
    std::vector<std::string> labels{"0", "0'"};
    for (int k = 1; k <= n; ++k) labels.push_back(s(k));
    auto id = [](int k) { return k + 1; };
    std::vector<std::tuple<int, int, int>> bonds{{0, id(1), a}, {1, id(1), ap}};
    for (int k = 1; k + 1 <= n - 2; ++k) bonds.emplace_back(id(k), id(k + 1), 3);
    bonds.emplace_back(id(n - 2), id(n - 1), b);
    bonds.emplace_back(id(n - 2), id(n), bp);
    return make_system(labels, bonds);
}

SystemPtr rank3(int p, int q, int r) { return make_system(numbered(1, 3), {{0, 2, p}, {0, 1, q}, {1, 2, r}}); }

SystemPtr right_angled(int n, const std::vector<std::pair<int, int>>& infinite_pairs) {
    std::vector<std::tuple<int, int, int>> bonds;
    for (auto [i, j] : infinite_pairs) bonds.emplace_back(i, j, kInf);
    return make_system(numbered(1, n), bonds);
}

GroupElement product(const CoxeterSystem& sys, const std::vector<std::string>& letters) {
    Word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.push_back(sys.index_of(*it));
    return element_of(sys, w);
}

RootVector product_root(const CoxeterSystem& sys, const std::vector<std::string>& letters, const std::string& simple) {
    return product(sys, letters).act(simple_root(sys, sys.index_of(simple)));
}

GroupElement parabolic_long_element(const CoxeterSystem& sys, const std::vector<int>& J) {
    GroupElement g = GroupElement::identity(sys);
    for (int steps = 0;; ++steps) {
        if (steps > 100000) throw std::domain_error("parabolic_long_element: W_J looks infinite");
        bool grew = false;
        for (int i : J)
            if (!g.has_left_descent(i)) {
                g = g.left_mul(i);
                grew = true;
            }
        if (!grew) return g;
    }
}

std::vector<std::string> alternating(const std::string& x, const std::string& y, int d) {
    std::vector<std::string> w(static_cast<std::size_t>(std::max(d, 0)));
    for (int k = 0; k < d; ++k) w[static_cast<std::size_t>(d - 1 - k)] = (k % 2 == 0) ? y : x;
    return w;
}

std::vector<GroupElement> s4_example_set(const CoxeterSystem& a3) {
    return {GroupElement::identity(a3), product(a3, {"1"}), product(a3, {"3"}), product(a3, {"1", "3"}),
            product(a3, {"2", "1", "3"})};
}

Counterexample d4_example() {
    Counterexample ex;
    ex.name = "D4-affine";
    ex.sys = affine_D4();
    const CoxeterSystem& W = *ex.sys;
    ex.ordering = W.parse_word("0,1,2,3,4");
    std::vector<GroupElement> K{product(W, {"2"})};
    for (const char* i : {"0", "1", "3", "4"}) K.push_back(product(W, {i, "2", i}));
    ex.L = ConvexSet::hull(W, K);
    ex.u0 = GroupElement::identity(W);
    ex.period = 2;
    return ex;
}

namespace {

// K = {s1, z_{n-3} s1, w_o({n-2,n-1}) z_{n-3}, w_o({n-2,n}) z_{n-3}}, indices via idx
std::vector<GroupElement> fork_generators(const CoxeterSystem& W, int n) {
    auto ix = [&](int k) { return W.index_of(s(k)); };
    GroupElement z = product(W, z_word(n - 3));
    GroupElement s1 = product(W, {"1"});
    return {s1, z * s1, parabolic_long_element(W, {ix(n - 2), ix(n - 1)}) * z,
            parabolic_long_element(W, {ix(n - 2), ix(n)}) * z};
}

}  // namespace

Counterexample family_B_example(int n, int b, int bp) {
    Counterexample ex;
    ex.name = "B-family n=" + s(n) + " b=" + s(b) + " b'=" + s(bp);
    ex.sys = family_B(n, b, bp);
    const CoxeterSystem& W = *ex.sys;
    for (int k = n; k >= 0; --k) ex.ordering.push_back(W.index_of(s(k)));
    std::vector<GroupElement> K = fork_generators(W, n);
    GroupElement tstar = product(W, {"0", "1", "0"});
    std::size_t base = K.size();
    for (std::size_t k = 0; k < base; ++k) K.push_back(K[k] * tstar);
    ex.L = ConvexSet::hull(W, K);
    ex.u0 = GroupElement::identity(W);
    ex.period = 2 * n - 2;
    return ex;
}

Counterexample family_D_example(int n, int a, int ap, int b, int bp, bool stated_ordering) {
    Counterexample ex;
    ex.name = "D-family n=" + s(n) + " a=" + s(a) + " a'=" + s(ap) + " b=" + s(b) + " b'=" + s(bp);
    ex.sys = family_D(n, a, ap, b, bp);
    const CoxeterSystem& W = *ex.sys;
    for (int k = n; k >= 1; --k) ex.ordering.push_back(W.index_of(s(k)));
    ex.ordering.push_back(W.index_of("0"));
    ex.ordering.push_back(W.index_of("0'"));
    if (stated_ordering) std::reverse(ex.ordering.begin(), ex.ordering.end());
    std::vector<GroupElement> K = fork_generators(W, n);
    K.push_back(parabolic_long_element(W, {W.index_of("0"), W.index_of("1")}));
    K.push_back(parabolic_long_element(W, {W.index_of("0'"), W.index_of("1")}));
    ex.L = ConvexSet::hull(W, K);
    ex.u0 = GroupElement::identity(W);
    ex.period = n - 1;
    return ex;
}

Counterexample f4_example() {
    Counterexample ex;
    ex.name = "F4-affine";
    ex.sys = affine_F4();
    const CoxeterSystem& W = *ex.sys;
    ex.ordering = W.parse_word("4,3,2,1,0");
    std::vector<HalfSpace> H{{product_root(W, {"2"}, "3"), -1},
                             {product_root(W, {"0", "1"}, "2"), +1},
                             {product_root(W, {"1", "3"}, "2"), +1},
                             {product_root(W, {"4", "3"}, "2"), +1}};
    ex.L = ConvexSet::halfspaces(W, H);
    ex.u0 = GroupElement::identity(W);
    ex.period = 3;
    return ex;
}

Counterexample e8_example() {
    Counterexample ex;
    ex.name = "E8-affine";
    ex.sys = affine_E8();
    const CoxeterSystem& W = *ex.sys;
    ex.ordering = W.parse_word("8,7,6,5,4,3,2,1,0");
    std::vector<HalfSpace> H{{product_root(W, {"7", "6", "4", "3", "2", "5"}, "4"), -1},
                             {simple_root(W, W.index_of("0")), +1},
                             {simple_root(W, W.index_of("2")), +1},
                             {product_root(W, {"1", "3"}, "4"), +1},
                             {product_root(W, {"5", "6"}, "7"), +1},
                             {product_root(W, {"3", "4"}, "5"), +1},
                             {product_root(W, {"6", "7"}, "8"), +1},
                             {product_root(W, {"4", "5"}, "6"), +1},
                             {product_root(W, {"7"}, "8"), +1}};
    ex.L = ConvexSet::halfspaces(W, H);
    ex.u0 = GroupElement::identity(W);
    ex.period = 3;
    return ex;
}

std::vector<std::pair<std::string, bool>> family_B_identities(int n, int b, int bp) {
    SystemPtr sp = family_B(n, b, bp);
    const CoxeterSystem& W = *sp;
    auto ix = [&](int k) { return W.index_of(s(k)); };
    GroupElement z = product(W, z_word(n - 3));
    GroupElement w1 = parabolic_long_element(W, {ix(n - 2), ix(n - 1)}) * z;
    GroupElement w2 = parabolic_long_element(W, {ix(n - 2), ix(n)}) * z;
    auto check = [&](const GroupElement& target, const std::vector<std::string>& letters) {
        Word app;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) app.push_back(W.index_of(*it));
        return element_of(W, app) == target && is_reduced(W, app);
    };
    // z_j equals (s_j ... s_1)(s_{j+1} ... s_2)
    std::vector<std::string> zalt = concat(descending(n - 3, 1), descending(n - 2, 2));
    std::vector<std::pair<std::string, bool>> out;
    out.emplace_back("z_{n-3} alternative form", product(W, zalt) == z);
    out.emplace_back("woz1", check(w1, concat(concat(alternating(s(n - 1), s(n - 2), b - 2), descending(n - 3, 1)),
                                              descending(n - 1, 1))));
    out.emplace_back("woz1'", check(w1, concat(concat(alternating(s(n - 2), s(n - 1), b - 2), descending(n - 2, 1)),
                                               descending(n - 1, 2))));
    std::vector<std::string> tail2{s(n)};
    for (int k = n - 2; k >= 1; --k) tail2.push_back(s(k));
    std::vector<std::string> tail2p{s(n)};
    for (int k = n - 2; k >= 2; --k) tail2p.push_back(s(k));
    out.emplace_back("woz2",
                     check(w2, concat(concat(alternating(s(n), s(n - 2), bp - 2), descending(n - 3, 1)), tail2)));
    out.emplace_back("woz2'",
                     check(w2, concat(concat(alternating(s(n - 2), s(n), bp - 2), descending(n - 2, 1)), tail2p)));
    return out;
}

}  // namespace bkb
