#include "bkb/element.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace bkb {

GroupElement GroupElement::identity(const CoxeterSystem& sys) {
    GroupElement g;
    g.sys_ = &sys;
    g.n_ = sys.rank();
    std::size_t nn = static_cast<std::size_t>(g.n_ * g.n_);
    g.M_.assign(nn, Scalar(sys.field(), Rational(0)));
    for (int i = 0; i < g.n_; ++i) g.M_[g.idx(i, i)] = Scalar(sys.field(), Rational(1));
    g.Minv_ = g.M_;
    return g;
}

namespace {

// Row i of A replaced by row_i(s_i A): A[i][c] -> -A[i][c] - 2 sum_k B(k,i) A[k][c].
void row_reflect(const CoxeterSystem& sys, std::vector<Scalar>& A, int n, int i) {
    for (int c = 0; c < n; ++c) {
        Scalar acc(sys.field(), Rational(0));
        for (int k : sys.neighbours(i)) {
            const Scalar& a = A[static_cast<std::size_t>(k * n + c)];
            if (!a.is_zero()) acc += sys.B(k, i) * a;
        }
        Scalar& x = A[static_cast<std::size_t>(i * n + c)];
        if (acc.is_zero())
            x = -x;
        else
            x = -x - Scalar(2) * acc;
    }
}

// A -> A s_i: column j gains -2 B(j,i) col_i for neighbours j, then col_i is negated.
void col_reflect(const CoxeterSystem& sys, std::vector<Scalar>& A, int n, int i) {
    for (int j : sys.neighbours(i)) {
        Scalar f = Scalar(-2) * sys.B(j, i);
        for (int r = 0; r < n; ++r) {
            const Scalar& a = A[static_cast<std::size_t>(r * n + i)];
            if (!a.is_zero()) A[static_cast<std::size_t>(r * n + j)] += f * a;
        }
    }
    for (int r = 0; r < n; ++r) {
        Scalar& x = A[static_cast<std::size_t>(r * n + i)];
        x = -x;
    }
}

int column_sign(const std::vector<Scalar>& A, int n, int c) {
    for (int r = 0; r < n; ++r) {
        const Scalar& x = A[static_cast<std::size_t>(r * n + c)];
        if (!x.is_zero()) return x.sign();
    }
    return 0;
}

}  // namespace

GroupElement GroupElement::left_mul(int i) const {
    GroupElement g = *this;
    row_reflect(*sys_, g.M_, n_, i);
    col_reflect(*sys_, g.Minv_, n_, i);
    return g;
}

GroupElement GroupElement::right_mul(int i) const {
    GroupElement g = *this;
    col_reflect(*sys_, g.M_, n_, i);
    row_reflect(*sys_, g.Minv_, n_, i);
    return g;
}

GroupElement GroupElement::inverse() const {
    GroupElement g = *this;
    std::swap(g.M_, g.Minv_);
    return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement g = a;
    int n = a.n_;
    const Field& f = a.sys_->field();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Scalar s(f, Rational(0)), t(f, Rational(0));
            for (int k = 0; k < n; ++k) {
                if (!a.M_[a.idx(r, k)].is_zero() && !b.M_[b.idx(k, c)].is_zero()) s += a.M_[a.idx(r, k)] * b.M_[b.idx(k, c)];
                if (!b.Minv_[b.idx(r, k)].is_zero() && !a.Minv_[a.idx(k, c)].is_zero())
                    t += b.Minv_[b.idx(r, k)] * a.Minv_[a.idx(k, c)];
            }
            g.M_[g.idx(r, c)] = s;
            g.Minv_[g.idx(r, c)] = t;
        }
    return g;
}

RootVector GroupElement::act(const RootVector& v) const {
    RootVector out(static_cast<std::size_t>(n_), Scalar(sys_->field(), Rational(0)));
    for (int c = 0; c < n_; ++c) {
        const Scalar& x = v[static_cast<std::size_t>(c)];
        if (x.is_zero()) continue;
        for (int r = 0; r < n_; ++r)
            if (!M_[idx(r, c)].is_zero()) out[static_cast<std::size_t>(r)] += M_[idx(r, c)] * x;
    }
    return out;
}

RootVector GroupElement::act_inv(const RootVector& v) const { return inverse().act(v); }

RootVector GroupElement::image_of_simple(int j) const {
    RootVector out;
    for (int r = 0; r < n_; ++r) out.push_back(M_[idx(r, j)]);
    return out;
}

RootVector GroupElement::inv_image_of_simple(int i) const {
    RootVector out;
    for (int r = 0; r < n_; ++r) out.push_back(Minv_[idx(r, i)]);
    return out;
}

bool GroupElement::has_left_descent(int i) const { return column_sign(Minv_, n_, i) < 0; }
bool GroupElement::has_right_descent(int i) const { return column_sign(M_, n_, i) < 0; }

bool GroupElement::is_identity() const { return *this == identity(*sys_); }

std::size_t GroupElement::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& s : M_) h = (h ^ s.hash()) * 0x100000001b3ULL;
    return h;
}

GroupElement element_of(const CoxeterSystem& sys, const Word& word) {
    GroupElement g = GroupElement::identity(sys);
    for (int i : word) {
        if (i < 0 || i >= sys.rank()) throw std::invalid_argument("word letter out of range");
        g = g.left_mul(i);
    }
    return g;
}

std::vector<int> left_descents(const GroupElement& g) {
    std::vector<int> out;
    for (int i = 0; i < g.rank(); ++i)
        if (g.has_left_descent(i)) out.push_back(i);
    return out;
}

std::vector<int> right_descents(const GroupElement& g) {
    std::vector<int> out;
    for (int i = 0; i < g.rank(); ++i)
        if (g.has_right_descent(i)) out.push_back(i);
    return out;
}

Word reduced_word(const GroupElement& g) {
    Word stripped;  // g = s_{stripped[0]} s_{stripped[1]} ...
    GroupElement cur = g;
    for (;;) {
        int d = -1;
        for (int i = cur.rank() - 1; i >= 0; --i)
            if (cur.has_left_descent(i)) {
                d = i;
                break;
            }
        if (d < 0) break;
        stripped.push_back(d);
        cur = cur.left_mul(d);
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

int length(const GroupElement& g) { return static_cast<int>(reduced_word(g).size()); }

bool is_reduced(const CoxeterSystem& sys, const Word& word) {
    GroupElement g = GroupElement::identity(sys);
    for (int i : word) {
        if (g.has_left_descent(i)) return false;
        g = g.left_mul(i);
    }
    return true;
}

RootSet inversion_roots(const GroupElement& g) {
    RootSet out;
    const CoxeterSystem& sys = g.system();
    GroupElement h = GroupElement::identity(sys);
    for (int l : reduced_word(g)) {
        out.insert(h.inv_image_of_simple(l));
        h = h.left_mul(l);
    }
    return out;
}

Word commutation_canonical(const CoxeterSystem& sys, const Word& word) {
    // Lexicographically least word in the commutation class: repeatedly pull
    // the smallest letter that commutes past everything before it.
    std::vector<int> rest = word;
    Word out;
    while (!rest.empty()) {
        int best = -1;
        std::size_t best_pos = 0;
        for (std::size_t p = 0; p < rest.size(); ++p) {
            bool free = true;
            for (std::size_t q = 0; q < p && free; ++q)
                free = rest[q] != rest[p] && sys.m(rest[q], rest[p]) == 2;
            if (free && (best < 0 || rest[p] < best)) {
                best = rest[p];
                best_pos = p;
            }
        }
        out.push_back(best);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_pos));
    }
    return out;
}

GroupElement long_element(const CoxeterSystem& sys) {
    if (!is_finite(sys)) throw std::domain_error("long_element: group is infinite");
    GroupElement g = GroupElement::identity(sys);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < sys.rank(); ++i)
            if (!g.has_left_descent(i)) {
                g = g.left_mul(i);
                grew = true;
            }
    }
    return g;
}

GroupElement demazure_product(const CoxeterSystem& sys, const Word& word) {
    GroupElement g = GroupElement::identity(sys);
    for (int i : word)
        if (!g.has_left_descent(i)) g = g.left_mul(i);
    return g;
}

int m_of_c(const CoxeterSystem& sys, const Word& c) {
    GroupElement w0 = long_element(sys);
    std::vector<int> seen(static_cast<std::size_t>(sys.rank()), 0);
    if (static_cast<int>(c.size()) != sys.rank()) throw std::invalid_argument("m_of_c: not a Coxeter word");
    for (int i : c) {
        if (i < 0 || i >= sys.rank() || seen[static_cast<std::size_t>(i)]++) throw std::invalid_argument("m_of_c: not a Coxeter word");
    }
    GroupElement g = GroupElement::identity(sys);
    for (int k = 0;; ++k) {
        if (g == w0) return k;
        for (int i : c)
            if (!g.has_left_descent(i)) g = g.left_mul(i);
    }
}

std::vector<GroupElement> enumerate_group(const CoxeterSystem& sys, std::size_t cap) {
    std::vector<GroupElement> out{GroupElement::identity(sys)};
    ElementSet seen{out[0]};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 0; i < sys.rank(); ++i) {
            if (out[k].has_left_descent(i)) continue;
            GroupElement h = out[k].left_mul(i);
            if (seen.insert(h).second) {
                out.push_back(h);
                if (out.size() > cap) throw std::length_error("enumerate_group: cap exceeded");
            }
        }
    }
    return out;
}

std::vector<GroupElement> ball(const CoxeterSystem& sys, int radius) {
    std::vector<GroupElement> out{GroupElement::identity(sys)};
    ElementSet seen{out[0]};
    std::size_t level_start = 0;
    for (int r = 0; r < radius; ++r) {
        std::size_t level_end = out.size();
        for (std::size_t k = level_start; k < level_end; ++k)
            for (int i = 0; i < sys.rank(); ++i) {
                if (out[k].has_left_descent(i)) continue;
                GroupElement h = out[k].left_mul(i);
                if (seen.insert(h).second) out.push_back(h);
            }
        level_start = level_end;
    }
    return out;
}

std::vector<Word> all_reduced_words(const GroupElement& g, std::size_t limit) {
    std::vector<Word> out;
    Word suffix;  // letters stripped so far, outermost first
    std::function<void(const GroupElement&)> rec = [&](const GroupElement& cur) {
        if (out.size() >= limit) return;
        auto d = left_descents(cur);
        if (d.empty()) {
            Word w(suffix.rbegin(), suffix.rend());
            out.push_back(w);
            return;
        }
        for (int i : d) {
            suffix.push_back(i);
            rec(cur.left_mul(i));
            suffix.pop_back();
            if (out.size() >= limit) return;
        }
    };
    rec(g);
    return out;
}

Word repeat_word(const Word& w, int times) {
    Word out;
    for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
    return out;
}

}  // namespace bkb
