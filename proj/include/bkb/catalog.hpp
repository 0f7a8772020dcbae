#pragma once

// Named Coxeter systems and the explicit non-heavy convex sets of the
// ancient-group constructions.

#include "bkb/billiards.hpp"

#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace bkb {

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// Unlisted pairs get m = 2; m = kInf for infinite bonds.
SystemPtr make_system(std::vector<std::string> labels, const std::vector<std::tuple<int, int, int>>& bonds);

SystemPtr type_A(int n);  // labels 1..n
SystemPtr type_B(int n);  // labels 1..n, m(1,2) = 4
SystemPtr type_H3();      // 1 -5- 2 - 3
SystemPtr dihedral(int m);  // labels 1,2; m may be kInf
SystemPtr affine_A(int n);  // cycle 0..n
SystemPtr affine_C(int n);  // 0 =4= 1 - ... - (n-1) =4= n
SystemPtr affine_G2();      // 1 - 2 =6= 3
SystemPtr affine_D4();      // centre 2, leaves 0,1,3,4
SystemPtr affine_F4();      // 0 - 1 - 2 =4= 3 - 4
SystemPtr affine_E6();      // 1-3-4-5-6, 2-4, 0-2
SystemPtr affine_E8();      // 1-3-4-5-6-7-8, 2-4, 0-8
// 0 -4- 1 - 2 - ... - (n-2), then (n-2) -b- (n-1) and (n-2) -b'- n.
SystemPtr family_B(int n, int b, int bp);
// 0 -a- 1, 0' -a'- 1, 1 - ... - (n-2), then the same fork as family_B.
SystemPtr family_D(int n, int a, int ap, int b, int bp);
// labels 1,2,3 with m(1,3) = p, m(1,2) = q, m(2,3) = r
SystemPtr rank3(int p, int q, int r);
// labels 1..n; listed pairs get m = kInf, all others 2
SystemPtr right_angled(int n, const std::vector<std::pair<int, int>>& infinite_pairs);

// Product s_{l_1} s_{l_2} ... written left to right (rightmost applied first).
GroupElement product(const CoxeterSystem& sys, const std::vector<std::string>& letters);
// w(alpha_j) for a left-to-right product w.
RootVector product_root(const CoxeterSystem& sys, const std::vector<std::string>& letters, const std::string& simple);
// Long element of the finite parabolic subgroup W_J.
GroupElement parabolic_long_element(const CoxeterSystem& sys, const std::vector<int>& J);
// [x | y]_d: alternating, length d, ending with y (left to right).
std::vector<std::string> alternating(const std::string& x, const std::string& y, int d);

struct Counterexample {
    std::string name;
    SystemPtr sys;
    Word ordering;  // application order
    ConvexSet L;
    GroupElement u0;
    int period = 0;  // claimed number of Pro_c applications returning to u0
};

Counterexample d4_example();
Counterexample family_B_example(int n, int b, int bp);
// stated_ordering: use 0', 0, 1, ..., n instead of n, ..., 1, 0, 0'.
Counterexample family_D_example(int n, int a, int ap, int b, int bp, bool stated_ordering = false);
Counterexample f4_example();
Counterexample e8_example();

// The reduced expressions for w_o({n-2,n-1}) z_{n-3} and w_o({n-2,n}) z_{n-3}
// in the family_B system: each pair is (name, holds).
std::vector<std::pair<std::string, bool>> family_B_identities(int n, int b, int bp);

// The S_4 example: L = {1, s1, s3, s1s3, s2s1s3}.
std::vector<GroupElement> s4_example_set(const CoxeterSystem& a3);

}  // namespace bkb
