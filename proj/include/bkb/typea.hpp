#pragma once

// Type A specialisation: posets on {0..n}, linear extensions, the poset form
// of the toggles, and the permutation dictionary for the path system A_n.

#include "bkb/convex.hpp"

#include <random>
#include <utility>
#include <vector>

namespace bkb {

// One-line notation on {0..n}: p[a] is the image of a.
using Perm = std::vector<int>;

struct Poset {
    int size = 0;
    std::vector<std::vector<char>> less;  // strict order, transitively closed

    static Poset from_pairs(int size, const std::vector<std::pair<int, int>>& pairs);  // closes transitively
    bool lt(int a, int b) const { return less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
    bool leq(int a, int b) const { return a == b || lt(a, b); }
    std::vector<std::pair<int, int>> pairs() const;
    bool valid() const;  // irreflexive, antisymmetric, transitive
    bool operator==(const Poset& o) const { return size == o.size && less == o.less; }
};

std::vector<Poset> all_posets(int size);
Poset random_poset(int size, std::mt19937& rng);

std::vector<Perm> all_perms(int size);
// u with a < b  =>  u[a] < u[b]
std::vector<Perm> linear_extensions(const Poset& P);
bool is_linear_extension(const Poset& P, const Perm& u);

// i in {0..n-1} swaps the values i, i+1 unless u^{-1}(i) <=_P u^{-1}(i+1).
Perm typeA_bk(const Poset& P, int i, const Perm& u);
Perm typeA_pro(const Poset& P, const Perm& u);
Perm typeA_ev(const Poset& P, const Perm& u);
// toggles 1,3,5,... (indices 0,2,4,...) first, then the even ones
Perm typeA_gyr(const Poset& P, const Perm& u);

// Throws std::invalid_argument unless sys is the path A_n.
void require_type_A(const CoxeterSystem& sys);
GroupElement element_of_perm(const CoxeterSystem& An, const Perm& u);
Perm perm_of_element(const GroupElement& g);
// e_a - e_b in the simple-root basis
RootVector root_e(const CoxeterSystem& An, int a, int b);

Poset poset_from_convex(const ConvexSet& L);
ConvexSet convex_from_poset(const CoxeterSystem& An, const Poset& P);

}  // namespace bkb
