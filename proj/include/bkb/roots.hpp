#pragma once

// Root vectors in the simple-root basis, the geometric action of generators,
// root enumeration, small roots and closure of root sets.

#include "bkb/scalar.hpp"
#include "bkb/system.hpp"

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bkb {

using RootVector = std::vector<Scalar>;

struct RootHash {
    std::size_t operator()(const RootVector& v) const;
};

// Insertion-ordered set of root vectors with exact deduplication.
class RootSet {
public:
    RootSet() = default;
    bool insert(const RootVector& v);  // true if new
    bool contains(const RootVector& v) const { return index_.count(v) != 0; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<RootVector>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    std::optional<std::size_t> index_of(const RootVector& v) const;

private:
    std::vector<RootVector> items_;
    std::unordered_map<RootVector, std::size_t, RootHash> index_;
};

RootVector simple_root(const CoxeterSystem& sys, int i);
RootVector zero_vector(const CoxeterSystem& sys);
Scalar bilinear(const CoxeterSystem& sys, const RootVector& a, const RootVector& b);
// B(v, alpha_i)
Scalar bilinear_simple(const CoxeterSystem& sys, const RootVector& v, int i);

RootVector apply_simple(const CoxeterSystem& sys, int i, const RootVector& v);
RootVector negate(const RootVector& v);
RootVector add(const RootVector& a, const RootVector& b);
RootVector scale(const Scalar& s, const RootVector& v);

// Throws std::domain_error on mixed signs or the zero vector.
bool is_positive(const RootVector& v);
// Sign of the first nonzero coordinate; no validation.
int leading_sign(const RootVector& v);

// All w(alpha_i) with l(w) <= depth, in breadth-first order.
RootSet enumerate_roots(const CoxeterSystem& sys, int depth);
// Positive roots reachable from simple roots through at most depth
// positive-to-positive reflections.  All of Phi+ for finite W at large depth.
RootSet positive_roots(const CoxeterSystem& sys, int depth);

// sin((k+1)pi/m)/sin(pi/m) alpha_i + sin(k pi/m)/sin(pi/m) alpha_j.
RootVector rank2_root(const CoxeterSystem& sys, int i, int j, long k);

RootSet small_roots(const CoxeterSystem& sys);

// (a, b) >= 0 with gamma = a b1 + b b2, if any.
std::optional<std::pair<Scalar, Scalar>> nonneg_combination(const RootVector& gamma, const RootVector& b1,
                                                            const RootVector& b2);

RootSet close_root_set(const RootSet& R, const RootSet& universe);

std::string root_str(const CoxeterSystem& sys, const RootVector& v);  // e.g. "z*a1+a2"

}  // namespace bkb
