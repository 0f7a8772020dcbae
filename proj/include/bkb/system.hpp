#pragma once

// Coxeter systems: labels, Coxeter matrix, the bilinear form, parabolic
// subsystems, acyclic orientations and folding.

#include "bkb/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bkb {

using Word = std::vector<int>;  // application order: first-applied letter first

constexpr int kInf = 0;  // Coxeter matrix entry for an infinite bond

class CoxeterSystem {
public:
    using Pair = std::pair<int, int>;  // always (min, max)

    CoxeterSystem() = default;
    // matrix uses kInf for infinity; mu gives the rational weight of infinite
    // bonds (default 1).  weights overrides mu with an arbitrary field element,
    // which is what folding produces.  min_field_order widens the field.
    CoxeterSystem(std::vector<std::string> labels, std::vector<std::vector<int>> matrix,
                  std::map<Pair, Rational> mu = {}, std::map<Pair, Scalar> weights = {},
                  int min_field_order = 2);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    int index_of(const std::string& label) const;  // throws on unknown label

    int m(int i, int j) const { return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }
    bool is_infinite_bond(int i, int j) const { return i != j && m(i, j) == kInf; }
    // Coxeter-graph edge: m >= 3 or infinite.
    bool is_edge(int i, int j) const { return i != j && m(i, j) != 2; }

    // Weight of an infinite bond (B = -weight); rational mu unless symbolic.
    const Scalar& bond_weight(int i, int j) const;
    const std::map<Pair, Rational>& mu() const { return mu_; }
    const std::map<Pair, Scalar>& symbolic_weights() const { return weights_; }

    const Field& field() const { return *field_; }
    const Scalar& B(int i, int j) const { return B_[static_cast<std::size_t>(i * rank() + j)]; }
    // Indices j != i with B(i,j) != 0.
    const std::vector<int>& neighbours(int i) const { return nbrs_[static_cast<std::size_t>(i)]; }

    Word parse_word(const std::string& text) const;  // comma separated labels; "" or "e" is empty
    std::string word_str(const Word& w) const;      // inverse of parse_word ("e" for empty)

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> matrix_;
    std::map<Pair, Rational> mu_;
    std::map<Pair, Scalar> weights_;
    std::map<Pair, Scalar> bond_weight_;
    const Field* field_ = &Field::rationals();
    std::vector<Scalar> B_;
    std::vector<std::vector<int>> nbrs_;
};

std::vector<std::vector<Scalar>> bilinear_form(const CoxeterSystem& sys);

// Positive definiteness of B by leading principal minors.
bool is_finite(const CoxeterSystem& sys);

// Restriction to J (labels keep their order in I).  The field is kept so that
// roots of the subsystem compare directly with roots of sys.
CoxeterSystem parabolic(const CoxeterSystem& sys, const std::vector<int>& J);

struct AcyclicOrientation {
    int n = 0;
    std::vector<CoxeterSystem::Pair> edges;  // Coxeter-graph edges (i < j)
    std::vector<bool> forward;               // true: i -> j
    bool operator==(const AcyclicOrientation&) const = default;
    bool has_arrow(int from, int to) const;
    bool is_acyclic() const;
};

// i -> i' iff i is applied before i' in the ordering.
AcyclicOrientation ao_of_coxeter_word(const CoxeterSystem& sys, const Word& ordering);
bool flip_equivalent(const AcyclicOrientation& a, const AcyclicOrientation& b);
// Number of edges oriented i -> i+1 (mod n) on a cycle graph 0..n-1.
int counterclockwise_edges(const AcyclicOrientation& o);

struct FoldingMap {
    CoxeterSystem source;
    std::vector<int> sigma;
    std::vector<std::vector<int>> orbits;  // orbit o lists its members; orbits[o][0] is i_o
    CoxeterSystem folded;
    std::vector<std::vector<int>> deg;     // deg[o2][o] = deg_{o2}(o)
    std::vector<std::vector<Scalar>> bfold;

    // Word in W for a word in W^fold: each letter is replaced by its orbit.
    Word iota(const Word& folded_word) const;
};

// Throws std::invalid_argument if sigma is not a graph automorphism or has a
// non-independent orbit, and std::logic_error if the folded form fails to
// match the folded labels.
FoldingMap fold(const CoxeterSystem& sys, const std::vector<int>& sigma);

}  // namespace bkb
