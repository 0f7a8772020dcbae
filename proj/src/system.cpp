#include "bkb/system.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bkb {

namespace {

CoxeterSystem::Pair key(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> labels, std::vector<std::vector<int>> matrix,
                             std::map<Pair, Rational> mu, std::map<Pair, Scalar> weights, int min_field_order)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    int n = rank();
    if (static_cast<int>(matrix_.size()) != n) throw std::invalid_argument("Coxeter matrix has wrong size");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty() || l.find(',') != std::string::npos || l == "e")
            throw std::invalid_argument("bad label '" + l + "'");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
    }
    int N = std::max(2, min_field_order);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix_[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("Coxeter matrix has wrong size");
        for (int j = 0; j < n; ++j) {
            int v = m(i, j);
            if (i == j && v != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
            if (v != m(j, i)) throw std::invalid_argument("Coxeter matrix must be symmetric");
            if (i != j && v != kInf && v < 2) throw std::invalid_argument("off-diagonal Coxeter labels must be >= 2");
            if (i != j && v >= 3) N = std::lcm(N, v);
        }
    }
    for (const auto& [p, q] : mu) {
        if (p.first == p.second || !is_infinite_bond(p.first, p.second))
            throw std::invalid_argument("mu given for a finite bond");
        if (q < 1) throw std::invalid_argument("mu must be >= 1");
        mu_[key(p.first, p.second)] = q;
    }
    for (const auto& [p, s] : weights) {
        if (p.first == p.second || !is_infinite_bond(p.first, p.second))
            throw std::invalid_argument("weight given for a finite bond");
        if (s < Scalar(1)) throw std::invalid_argument("infinite-bond weight must be >= 1");
        weights_.emplace(key(p.first, p.second), s);
        N = std::lcm(N, s.field().order());
    }
    field_ = &Field::get(N);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!is_infinite_bond(i, j)) continue;
            auto k = key(i, j);
            const Field& f = *field_;
            if (auto it = weights_.find(k); it != weights_.end())
                bond_weight_.emplace(k, embed(it->second, f));
            else if (auto jt = mu_.find(k); jt != mu_.end())
                bond_weight_.emplace(k, Scalar(f, jt->second));
            else
                bond_weight_.emplace(k, Scalar(f, Rational(1)));
        }
    B_.assign(static_cast<std::size_t>(n * n), Scalar(*field_, Rational(0)));
    nbrs_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar& b = B_[static_cast<std::size_t>(i * n + j)];
            if (i == j)
                b = Scalar(*field_, Rational(1));
            else if (m(i, j) == kInf)
                b = -bond_weight_.at(key(i, j));
            else
                b = -cos_pi_over(m(i, j), *field_);
            if (i != j && !b.is_zero()) nbrs_[static_cast<std::size_t>(i)].push_back(j);
        }
}

int CoxeterSystem::index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    throw std::invalid_argument("unknown label '" + label + "'");
}

const Scalar& CoxeterSystem::bond_weight(int i, int j) const { return bond_weight_.at(key(i, j)); }

Word CoxeterSystem::parse_word(const std::string& text) const {
    Word w;
    if (text.empty() || text == "e") return w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        w.push_back(index_of(tok));
    }
    return w;
}

std::string CoxeterSystem::word_str(const Word& w) const {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ",";
        out += label(w[k]);
    }
    return out;
}

std::vector<std::vector<Scalar>> bilinear_form(const CoxeterSystem& sys) {
    int n = sys.rank();
    std::vector<std::vector<Scalar>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)].push_back(sys.B(i, j));
    return out;
}

bool is_finite(const CoxeterSystem& sys) {
    auto A = bilinear_form(sys);
    std::size_t n = A.size();
    // Gaussian elimination without pivoting: the k-th pivot is D_k / D_{k-1}.
    for (std::size_t k = 0; k < n; ++k) {
        if (A[k][k].sign() <= 0) return false;
        Scalar inv = A[k][k].inverse();
        for (std::size_t r = k + 1; r < n; ++r) {
            if (A[r][k].is_zero()) continue;
            Scalar f = A[r][k] * inv;
            for (std::size_t c = k; c < n; ++c) A[r][c] -= f * A[k][c];
        }
    }
    return true;
}

CoxeterSystem parabolic(const CoxeterSystem& sys, const std::vector<int>& J) {
    std::vector<int> idx = J;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<std::string> labels;
    std::vector<std::vector<int>> M;
    std::map<CoxeterSystem::Pair, Rational> mu;
    std::map<CoxeterSystem::Pair, Scalar> weights;
    for (int a : idx) {
        labels.push_back(sys.label(a));
        std::vector<int> row;
        for (int b : idx) row.push_back(sys.m(a, b));
        M.push_back(row);
    }
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
            int a = idx[x], b = idx[y];
            if (!sys.is_infinite_bond(a, b)) continue;
            CoxeterSystem::Pair p{static_cast<int>(x), static_cast<int>(y)};
            if (auto it = sys.symbolic_weights().find(key(a, b)); it != sys.symbolic_weights().end())
                weights.emplace(p, it->second);
            else if (auto jt = sys.mu().find(key(a, b)); jt != sys.mu().end())
                mu.emplace(p, jt->second);
        }
    return CoxeterSystem(labels, M, mu, weights, sys.field().order());
}

// ---------------------------------------------------------------- orientations

bool AcyclicOrientation::has_arrow(int from, int to) const {
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e] == CoxeterSystem::Pair{from, to}) return forward[e];
        if (edges[e] == CoxeterSystem::Pair{to, from}) return !forward[e];
    }
    return false;
}

bool AcyclicOrientation::is_acyclic() const {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int a = edges[e].first, b = edges[e].second;
        if (!forward[e]) std::swap(a, b);
        out[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
    return seen == n;
}

AcyclicOrientation ao_of_coxeter_word(const CoxeterSystem& sys, const Word& ordering) {
    int n = sys.rank();
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering must list every index once");
    for (std::size_t k = 0; k < ordering.size(); ++k) {
        int i = ordering[k];
        if (i < 0 || i >= n || pos[static_cast<std::size_t>(i)] != -1)
            throw std::invalid_argument("ordering must list every index once");
        pos[static_cast<std::size_t>(i)] = static_cast<int>(k);
    }
    AcyclicOrientation o;
    o.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sys.is_edge(i, j)) {
                o.edges.push_back({i, j});
                o.forward.push_back(pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)]);
            }
    return o;
}

bool flip_equivalent(const AcyclicOrientation& a, const AcyclicOrientation& b) {
    if (a.n != b.n || a.edges != b.edges) throw std::invalid_argument("orientations of different graphs");
    if (a.forward == b.forward) return true;
    std::set<std::vector<bool>> seen{a.forward};
    std::queue<std::vector<bool>> q;
    q.push(a.forward);
    while (!q.empty()) {
        auto cur = q.front();
        q.pop();
        for (int v = 0; v < a.n; ++v) {
            bool all_out = true, all_in = true, any = false;
            for (std::size_t e = 0; e < a.edges.size(); ++e) {
                bool tail;
                if (a.edges[e].first == v)
                    tail = cur[e];
                else if (a.edges[e].second == v)
                    tail = !cur[e];
                else
                    continue;
                any = true;
                (tail ? all_in : all_out) = false;
            }
            if (!any || !(all_out || all_in)) continue;
            auto next = cur;
            for (std::size_t e = 0; e < a.edges.size(); ++e)
                if (a.edges[e].first == v || a.edges[e].second == v) next[e] = !next[e];
            if (next == b.forward) return true;
            if (seen.insert(next).second) q.push(next);
        }
    }
    return false;
}

int counterclockwise_edges(const AcyclicOrientation& o) {
    int count = 0;
    for (std::size_t e = 0; e < o.edges.size(); ++e) {
        auto [i, j] = o.edges[e];
        bool i_to_j = o.forward[e];
        if (j == i + 1)
            count += i_to_j ? 1 : 0;
        else if (i == 0 && j == o.n - 1)
            count += i_to_j ? 0 : 1;  // n-1 -> 0 closes the cycle
        else
            throw std::invalid_argument("counterclockwise_edges: not a cycle graph");
    }
    return count;
}

// ---------------------------------------------------------------- folding

Word FoldingMap::iota(const Word& folded_word) const {
    Word out;
    for (int o : folded_word)
        for (int i : orbits[static_cast<std::size_t>(o)]) out.push_back(i);
    return out;
}

namespace {

int folded_label(int deg_lo, int deg_hi, std::multiset<int> lab_hi) {
    // deg_lo <= deg_hi; lab_hi = lab_{o}(o') for the orbit o' with larger degree.
    if (deg_lo == 0) return 2;
    if (deg_lo >= 2) return kInf;
    if (deg_hi == 1) return *lab_hi.begin();
    if (lab_hi == std::multiset<int>{3, 3}) return 4;
    if (lab_hi == std::multiset<int>{3, 3, 3}) return 6;
    return kInf;
}

}  // namespace

FoldingMap fold(const CoxeterSystem& sys, const std::vector<int>& sigma) {
    int n = sys.rank();
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("sigma has wrong size");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) throw std::invalid_argument("sigma is not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
    auto sg = [&](int i) { return sigma[static_cast<std::size_t>(i)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sys.m(sg(i), sg(j)) != sys.m(i, j)) throw std::invalid_argument("sigma is not a Coxeter graph automorphism");

    FoldingMap fm;
    fm.source = sys;
    fm.sigma = sigma;
    std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (orbit_of[static_cast<std::size_t>(i)] != -1) continue;
        std::vector<int> orb;
        for (int j = i; orbit_of[static_cast<std::size_t>(j)] == -1; j = sg(j)) {
            orbit_of[static_cast<std::size_t>(j)] = static_cast<int>(fm.orbits.size());
            orb.push_back(j);
        }
        std::sort(orb.begin(), orb.end());
        for (int a : orb)
            for (int b : orb)
                if (sys.is_edge(a, b)) throw std::invalid_argument("orbit is not an independent set");
        fm.orbits.push_back(orb);
    }
    std::size_t k = fm.orbits.size();
    fm.deg.assign(k, std::vector<int>(k, 0));
    std::vector<std::vector<std::multiset<int>>> lab(k, std::vector<std::multiset<int>>(k));
    for (std::size_t o = 0; o < k; ++o)
        for (std::size_t o2 = 0; o2 < k; ++o2) {
            if (o == o2) continue;
            int rep = fm.orbits[o][0];
            for (int j : fm.orbits[o2])
                if (sys.is_edge(rep, j)) {
                    ++fm.deg[o2][o];
                    lab[o2][o].insert(sys.m(rep, j) == kInf ? 1000000 : sys.m(rep, j));
                }
        }

    std::vector<std::vector<int>> M(k, std::vector<int>(k, 1));
    int N = sys.field().order();
    for (std::size_t o = 0; o < k; ++o)
        for (std::size_t o2 = o + 1; o2 < k; ++o2) {
            int d1 = fm.deg[o2][o], d2 = fm.deg[o][o2];
            // order so that the first argument has the smaller degree
            int lbl = d1 <= d2 ? folded_label(d1, d2, lab[o][o2]) : folded_label(d2, d1, lab[o2][o]);
            if (lbl == 1000000) lbl = kInf;
            M[o][o2] = M[o2][o] = lbl;
            if (lbl != kInf && lbl >= 3) N = std::lcm(N, lbl);
            Rational ratio(static_cast<long>(fm.orbits[o].size()), static_cast<long>(fm.orbits[o2].size()));
            ratio.canonicalize();
            N = std::lcm(N, sqrt_rational_order(ratio));
        }
    const Field& f = Field::get(N);

    fm.bfold.assign(k, std::vector<Scalar>(k, Scalar(f, Rational(0))));
    std::map<CoxeterSystem::Pair, Scalar> weights;
    for (std::size_t o = 0; o < k; ++o) {
        fm.bfold[o][o] = Scalar(f, Rational(1));
        for (std::size_t o2 = 0; o2 < k; ++o2) {
            if (o == o2) continue;
            Scalar X(f, Rational(0)), Y(f, Rational(0));
            for (int j : fm.orbits[o2]) X += embed(sys.B(fm.orbits[o][0], j), f);
            for (int j : fm.orbits[o]) Y += embed(sys.B(fm.orbits[o2][0], j), f);
            Rational ratio(static_cast<long>(fm.orbits[o].size()), static_cast<long>(fm.orbits[o2].size()));
            ratio.canonicalize();
            Scalar root;
            if (!sqrt_rational(ratio, f, root)) throw std::logic_error("fold: square root missing from field");
            Scalar b = root * X;
            if (b * b != X * Y || b.sign() > 0) throw std::logic_error("fold: folded form identity failed");
            fm.bfold[o][o2] = b;
            int lbl = M[o][o2];
            if (lbl == kInf) {
                if (b > Scalar(-1)) throw std::logic_error("fold: infinite folded label with form > -1");
                if (o < o2) weights.emplace(CoxeterSystem::Pair{static_cast<int>(o), static_cast<int>(o2)}, -b);
            } else if (b != -cos_pi_over(lbl, f)) {
                throw std::logic_error("fold: folded form does not match folded label");
            }
        }
    }

    std::vector<std::string> labels;
    for (const auto& orb : fm.orbits) {
        std::string l;
        for (std::size_t t = 0; t < orb.size(); ++t) l += (t ? "+" : "") + sys.label(orb[t]);
        labels.push_back(l);
    }
    // Rational weights go into mu so the folded system serializes plainly.
    std::map<CoxeterSystem::Pair, Rational> mu;
    std::map<CoxeterSystem::Pair, Scalar> sym;
    for (auto& [p, w] : weights) {
        if (w.is_rational())
            mu.emplace(p, w.rational_value());
        else
            sym.emplace(p, w);
    }
    fm.folded = CoxeterSystem(labels, M, mu, sym, N);
    for (std::size_t o = 0; o < k; ++o)
        for (std::size_t o2 = 0; o2 < k; ++o2)
            if (fm.folded.B(static_cast<int>(o), static_cast<int>(o2)) != fm.bfold[o][o2])
                throw std::logic_error("fold: folded system form mismatch");
    return fm;
}

}  // namespace bkb
