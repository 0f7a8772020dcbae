#include "bkb/typea.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bkb {

Poset Poset::from_pairs(int size, const std::vector<std::pair<int, int>>& pairs) {
    Poset P;
    P.size = size;
    P.less.assign(static_cast<std::size_t>(size), std::vector<char>(static_cast<std::size_t>(size), 0));
    for (auto [a, b] : pairs) P.less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    for (int k = 0; k < size; ++k)
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                if (P.lt(a, k) && P.lt(k, b)) P.less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    if (!P.valid()) throw std::invalid_argument("relation is not a partial order");
    return P;
}

std::vector<std::pair<int, int>> Poset::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (lt(a, b)) out.emplace_back(a, b);
    return out;
}

bool Poset::valid() const {
    for (int a = 0; a < size; ++a) {
        if (lt(a, a)) return false;
        for (int b = 0; b < size; ++b) {
            if (lt(a, b) && lt(b, a)) return false;
            for (int c = 0; c < size; ++c)
                if (lt(a, b) && lt(b, c) && !lt(a, c)) return false;
        }
    }
    return true;
}

std::vector<Poset> all_posets(int size) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (a != b) slots.emplace_back(a, b);
    std::vector<Poset> out;
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
        Poset P;
        P.size = size;
        P.less.assign(static_cast<std::size_t>(size), std::vector<char>(static_cast<std::size_t>(size), 0));
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) P.less[static_cast<std::size_t>(slots[k].first)][static_cast<std::size_t>(slots[k].second)] = 1;
        if (P.valid()) out.push_back(std::move(P));
    }
    return out;
}

Poset random_poset(int size, std::mt19937& rng) {
    // random DAG on a shuffled order, then closed
    std::vector<int> order(static_cast<std::size_t>(size));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(0.35);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < size; ++x)
        for (int y = x + 1; y < size; ++y)
            if (coin(rng)) pairs.emplace_back(order[static_cast<std::size_t>(x)], order[static_cast<std::size_t>(y)]);
    return Poset::from_pairs(size, pairs);
}

std::vector<Perm> all_perms(int size) {
    Perm p(static_cast<std::size_t>(size));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_linear_extension(const Poset& P, const Perm& u) {
    for (auto [a, b] : P.pairs())
        if (u[static_cast<std::size_t>(a)] > u[static_cast<std::size_t>(b)]) return false;
    return true;
}

std::vector<Perm> linear_extensions(const Poset& P) {
    std::vector<Perm> out;
    for (auto& u : all_perms(P.size))
        if (is_linear_extension(P, u)) out.push_back(u);
    return out;
}

Perm typeA_bk(const Poset& P, int i, const Perm& u) {
    int a = -1, b = -1;  // u^{-1}(i), u^{-1}(i+1)
    for (int x = 0; x < P.size; ++x) {
        if (u[static_cast<std::size_t>(x)] == i) a = x;
        if (u[static_cast<std::size_t>(x)] == i + 1) b = x;
    }
    if (P.leq(a, b)) return u;
    Perm v = u;
    std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
    return v;
}

Perm typeA_pro(const Poset& P, const Perm& u) {
    Perm v = u;
    for (int i = 0; i + 1 < P.size; ++i) v = typeA_bk(P, i, v);
    return v;
}

Perm typeA_ev(const Poset& P, const Perm& u) {
    Perm v = u;
    for (int top = P.size - 2; top >= 0; --top)
        for (int i = 0; i <= top; ++i) v = typeA_bk(P, i, v);
    return v;
}

Perm typeA_gyr(const Poset& P, const Perm& u) {
    Perm v = u;
    for (int i = 0; i + 1 < P.size; i += 2) v = typeA_bk(P, i, v);
    for (int i = 1; i + 1 < P.size; i += 2) v = typeA_bk(P, i, v);
    return v;
}

void require_type_A(const CoxeterSystem& sys) {
    for (int i = 0; i < sys.rank(); ++i)
        for (int j = i + 1; j < sys.rank(); ++j)
            if (sys.m(i, j) != (j == i + 1 ? 3 : 2)) throw std::invalid_argument("system is not the type A path");
}

GroupElement element_of_perm(const CoxeterSystem& An, const Perm& u) {
    require_type_A(An);
    if (static_cast<int>(u.size()) != An.rank() + 1) throw std::invalid_argument("permutation size does not match rank");
    // peel left descents: i is one when u^{-1}(i) > u^{-1}(i+1)
    Perm inv(u.size()), v = u;
    Word left;  // v = s_{left[0]} s_{left[1]} ... (left to right)
    while (true) {
        for (std::size_t a = 0; a < v.size(); ++a) inv[static_cast<std::size_t>(v[a])] = static_cast<int>(a);
        int found = -1;
        for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i)
            if (inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(i + 1)]) {
                found = i;
                break;
            }
        if (found < 0) break;
        left.push_back(found);
        std::swap(v[static_cast<std::size_t>(inv[static_cast<std::size_t>(found)])],
                  v[static_cast<std::size_t>(inv[static_cast<std::size_t>(found + 1)])]);
    }
    std::reverse(left.begin(), left.end());
    return element_of(An, left);
}

Perm perm_of_element(const GroupElement& g) {
    int n = g.rank();
    Perm p(static_cast<std::size_t>(n + 1));
    std::iota(p.begin(), p.end(), 0);
    for (int l : reduced_word(g))
        for (auto& x : p) {
            if (x == l)
                x = l + 1;
            else if (x == l + 1)
                x = l;
        }
    return p;
}

RootVector root_e(const CoxeterSystem& An, int a, int b) {
    RootVector v = zero_vector(An);
    int lo = std::min(a, b), hi = std::max(a, b);
    Scalar s(a < b ? 1 : -1);
    for (int k = lo; k < hi; ++k) v[static_cast<std::size_t>(k)] = s;
    return v;
}

Poset poset_from_convex(const ConvexSet& L) {
    const CoxeterSystem& sys = L.system();
    require_type_A(sys);
    int size = sys.rank() + 1;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (a != b) {
                Tri t = L.in_RL(root_e(sys, a, b));
                if (t == Tri::Unknown) throw std::runtime_error("poset_from_convex: undecided root");
                if (t == Tri::Yes) pairs.emplace_back(a, b);
            }
    return Poset::from_pairs(size, pairs);
}

ConvexSet convex_from_poset(const CoxeterSystem& An, const Poset& P) {
    std::vector<GroupElement> gens;
    for (const auto& u : linear_extensions(P)) gens.push_back(element_of_perm(An, u));
    return ConvexSet::hull(An, gens);
}

}  // namespace bkb
