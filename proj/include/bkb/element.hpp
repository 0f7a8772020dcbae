#pragma once

// Group elements as exact matrices of the geometric representation.

#include "bkb/roots.hpp"
#include "bkb/system.hpp"

#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bkb {

class GroupElement {
public:
    GroupElement() = default;
    static GroupElement identity(const CoxeterSystem& sys);

    const CoxeterSystem& system() const { return *sys_; }
    int rank() const { return n_; }

    // Column j of the matrix is w(alpha_j).
    const Scalar& entry(int r, int c) const { return M_[idx(r, c)]; }
    const Scalar& inv_entry(int r, int c) const { return Minv_[idx(r, c)]; }

    GroupElement left_mul(int i) const;   // s_i w
    GroupElement right_mul(int i) const;  // w s_i
    GroupElement inverse() const;
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

    RootVector act(const RootVector& v) const;      // w v
    RootVector act_inv(const RootVector& v) const;  // w^{-1} v
    RootVector image_of_simple(int j) const;        // w alpha_j
    RootVector inv_image_of_simple(int i) const;    // w^{-1} alpha_i

    // l(s_i w) < l(w)
    bool has_left_descent(int i) const;
    bool has_right_descent(int i) const;
    bool is_identity() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.M_ == b.M_; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    std::size_t hash() const;

private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r * n_ + c); }
    const CoxeterSystem* sys_ = nullptr;
    int n_ = 0;
    std::vector<Scalar> M_;
    std::vector<Scalar> Minv_;
};

struct ElementHash {
    std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};
using ElementSet = std::unordered_set<GroupElement, ElementHash>;

GroupElement element_of(const CoxeterSystem& sys, const Word& word);

std::vector<int> left_descents(const GroupElement& g);
std::vector<int> right_descents(const GroupElement& g);
int length(const GroupElement& g);
// Application-order reduced word, stripping the largest left descent first.
Word reduced_word(const GroupElement& g);
bool is_reduced(const CoxeterSystem& sys, const Word& word);

// {gamma > 0 : g gamma < 0}, in the order produced by a reduced word.
RootSet inversion_roots(const GroupElement& g);

Word commutation_canonical(const CoxeterSystem& sys, const Word& word);

GroupElement long_element(const CoxeterSystem& sys);  // throws on infinite W
GroupElement demazure_product(const CoxeterSystem& sys, const Word& word);
int m_of_c(const CoxeterSystem& sys, const Word& c);

// Every element of a finite group, breadth-first from the identity.
std::vector<GroupElement> enumerate_group(const CoxeterSystem& sys, std::size_t cap = 2000000);
// Elements of length <= radius.
std::vector<GroupElement> ball(const CoxeterSystem& sys, int radius);

// Every reduced word of a finite group element (up to limit words).
std::vector<Word> all_reduced_words(const GroupElement& g, std::size_t limit);

Word repeat_word(const Word& w, int times);

}  // namespace bkb
