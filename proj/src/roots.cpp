#include "bkb/roots.hpp"

#include <deque>
#include <stdexcept>

namespace bkb {

std::size_t RootHash::operator()(const RootVector& v) const {
    std::size_t h = v.size();
    for (const auto& s : v) h = h * 1000003u ^ s.hash();
    return h;
}

bool RootSet::insert(const RootVector& v) {
    auto [it, fresh] = index_.emplace(v, items_.size());
    if (fresh) items_.push_back(v);
    return fresh;
}

std::optional<std::size_t> RootSet::index_of(const RootVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RootVector zero_vector(const CoxeterSystem& sys) {
    return RootVector(static_cast<std::size_t>(sys.rank()), Scalar(sys.field(), Rational(0)));
}

RootVector simple_root(const CoxeterSystem& sys, int i) {
    RootVector v = zero_vector(sys);
    v[static_cast<std::size_t>(i)] = Scalar(sys.field(), Rational(1));
    return v;
}

Scalar bilinear_simple(const CoxeterSystem& sys, const RootVector& v, int i) {
    Scalar s = v[static_cast<std::size_t>(i)];
    for (int j : sys.neighbours(i))
        if (!v[static_cast<std::size_t>(j)].is_zero()) s += v[static_cast<std::size_t>(j)] * sys.B(j, i);
    return s;
}

Scalar bilinear(const CoxeterSystem& sys, const RootVector& a, const RootVector& b) {
    Scalar s(sys.field(), Rational(0));
    for (int i = 0; i < sys.rank(); ++i)
        if (!b[static_cast<std::size_t>(i)].is_zero()) s += bilinear_simple(sys, a, i) * b[static_cast<std::size_t>(i)];
    return s;
}

RootVector apply_simple(const CoxeterSystem& sys, int i, const RootVector& v) {
    RootVector out = v;
    out[static_cast<std::size_t>(i)] -= Scalar(2) * bilinear_simple(sys, v, i);
    return out;
}

RootVector negate(const RootVector& v) {
    RootVector out = v;
    for (auto& s : out) s = -s;
    return out;
}

RootVector add(const RootVector& a, const RootVector& b) {
    RootVector out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

RootVector scale(const Scalar& s, const RootVector& v) {
    RootVector out = v;
    for (auto& x : out) x *= s;
    return out;
}

int leading_sign(const RootVector& v) {
    for (const auto& s : v) {
        if (s.is_zero()) continue;
        return s.sign();
    }
    return 0;
}

bool is_positive(const RootVector& v) {
    int seen = 0;
    for (const auto& s : v) {
        int sg = s.sign();
        if (sg == 0) continue;
        if (seen != 0 && sg != seen) throw std::domain_error("vector with mixed signs is not a root");
        seen = sg;
    }
    if (seen == 0) throw std::domain_error("zero vector is not a root");
    return seen > 0;
}

RootSet enumerate_roots(const CoxeterSystem& sys, int depth) {
    RootSet out;
    std::vector<RootVector> frontier;
    for (int i = 0; i < sys.rank(); ++i) {
        out.insert(simple_root(sys, i));
        frontier.push_back(simple_root(sys, i));
    }
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<RootVector> next;
        for (const auto& v : frontier)
            for (int i = 0; i < sys.rank(); ++i) {
                RootVector w = apply_simple(sys, i, v);
                if (out.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return out;
}

RootSet positive_roots(const CoxeterSystem& sys, int depth) {
    RootSet out;
    std::vector<RootVector> frontier;
    for (int i = 0; i < sys.rank(); ++i) {
        out.insert(simple_root(sys, i));
        frontier.push_back(simple_root(sys, i));
    }
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<RootVector> next;
        for (const auto& v : frontier)
            for (int i = 0; i < sys.rank(); ++i) {
                if (bilinear_simple(sys, v, i).sign() >= 0) continue;  // s_i v would not be higher
                RootVector w = apply_simple(sys, i, v);
                if (out.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return out;
}

RootVector rank2_root(const CoxeterSystem& sys, int i, int j, long k) {
    int m = sys.m(i, j);
    if (m == kInf) throw std::invalid_argument("rank2_root: infinite bond");
    RootVector v = zero_vector(sys);
    v[static_cast<std::size_t>(i)] = sine_ratio(m, k + 1, sys.field());
    v[static_cast<std::size_t>(j)] = sine_ratio(m, k, sys.field());
    return v;
}

RootSet small_roots(const CoxeterSystem& sys) {
    RootSet out;
    std::deque<RootVector> queue;
    for (int i = 0; i < sys.rank(); ++i) {
        out.insert(simple_root(sys, i));
        queue.push_back(simple_root(sys, i));
    }
    Scalar minus_one(sys.field(), Rational(-1));
    while (!queue.empty()) {
        RootVector g = queue.front();
        queue.pop_front();
        for (int i = 0; i < sys.rank(); ++i) {
            Scalar b = bilinear_simple(sys, g, i);
            if (b.sign() >= 0 || !(b > minus_one)) continue;
            RootVector h = apply_simple(sys, i, g);
            if (out.insert(h)) queue.push_back(std::move(h));
        }
    }
    return out;
}

namespace {

// gamma = t * v for some scalar t, returned if so.
std::optional<Scalar> multiple_of(const RootVector& gamma, const RootVector& v) {
    std::size_t piv = v.size();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) {
            piv = k;
            break;
        }
    if (piv == v.size()) return std::nullopt;
    Scalar t = gamma[piv] / v[piv];
    for (std::size_t k = 0; k < v.size(); ++k)
        if (gamma[k] != t * v[k]) return std::nullopt;
    return t;
}

}  // namespace

std::optional<std::pair<Scalar, Scalar>> nonneg_combination(const RootVector& gamma, const RootVector& b1,
                                                            const RootVector& b2) {
    std::size_t n = gamma.size();
    Scalar zero = gamma.empty() ? Scalar() : Scalar(gamma[0].field(), Rational(0));
    // find a nonzero 2x2 minor
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            Scalar det = b1[p] * b2[q] - b1[q] * b2[p];
            if (det.is_zero()) continue;
            Scalar a = (gamma[p] * b2[q] - gamma[q] * b2[p]) / det;
            Scalar b = (b1[p] * gamma[q] - b1[q] * gamma[p]) / det;
            for (std::size_t k = 0; k < n; ++k)
                if (gamma[k] != a * b1[k] + b * b2[k]) return std::nullopt;
            if (a.sign() < 0 || b.sign() < 0) return std::nullopt;
            return std::make_pair(a, b);
        }
    // b1, b2 parallel (or one is zero)
    if (auto t = multiple_of(gamma, b1); t && t->sign() >= 0) return std::make_pair(*t, zero);
    if (auto t = multiple_of(gamma, b2); t && t->sign() >= 0) return std::make_pair(zero, *t);
    bool gz = true;
    for (const auto& s : gamma) gz = gz && s.is_zero();
    if (gz) return std::make_pair(zero, zero);
    return std::nullopt;
}

RootSet close_root_set(const RootSet& R, const RootSet& universe) {
    RootSet out = R;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : universe) {
            if (out.contains(g)) continue;
            const auto& items = out.items();
            bool found = false;
            for (std::size_t a = 0; a < items.size() && !found; ++a)
                for (std::size_t b = a + 1; b < items.size() && !found; ++b)
                    found = nonneg_combination(g, items[a], items[b]).has_value();
            if (found) {
                out.insert(g);
                changed = true;
            }
        }
    }
    return out;
}

std::string root_str(const CoxeterSystem& sys, const RootVector& v) {
    std::string out;
    for (int i = 0; i < sys.rank(); ++i) {
        const Scalar& c = v[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string coef;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            if (q == 1)
                coef = "";
            else if (q == -1)
                coef = "-";
            else
                coef = rational_str(q);
        } else {
            coef = "(" + c.str() + ")";
        }
        if (!out.empty() && coef.rfind('-', 0) != 0) out += "+";
        out += coef + "a" + sys.label(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace bkb
