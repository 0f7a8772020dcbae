#include "bkb/convex.hpp"

#include "bkb/billiards.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

namespace bkb {

const char* tri_str(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

bool SeparatorSet::operator==(const SeparatorSet& o) const {
    if (roots.size() != o.roots.size()) return false;
    for (const auto& r : roots)
        if (!o.roots.contains(r)) return false;
    return true;
}

ConvexSet ConvexSet::hull(const CoxeterSystem& sys, std::vector<GroupElement> generators) {
    if (generators.empty()) throw std::invalid_argument("hull needs at least one generator");
    ConvexSet L;
    L.sys_ = &sys;
    L.hull_ = true;
    // drop duplicates, keep first occurrence order
    ElementSet seen;
    for (auto& g : generators)
        if (seen.insert(g).second) L.gens_.push_back(std::move(g));
    return L;
}

namespace {

bool satisfies(const GroupElement& w, const HalfSpace& h) {
    int s = leading_sign(w.act(h.root));
    return s == h.sign;
}

}  // namespace

ConvexSet ConvexSet::halfspaces(const CoxeterSystem& sys, std::vector<HalfSpace> constraints,
                                std::optional<GroupElement> witness, Effort effort) {
    ConvexSet L;
    L.sys_ = &sys;
    L.hull_ = false;
    L.effort_ = effort;
    for (auto& h : constraints) {
        if (!is_positive(h.root)) throw std::invalid_argument("half-space roots must be positive");
        if (h.sign != 1 && h.sign != -1) throw std::invalid_argument("half-space sign must be +1 or -1");
    }
    L.cons_ = std::move(constraints);
    if (witness) {
        for (const auto& h : L.cons_)
            if (!satisfies(*witness, h)) throw std::invalid_argument("witness violates a half-space");
        L.witness_ = *witness;
        return L;
    }
    // Breadth-first from the identity inside the "+" half-spaces (a convex set containing 1).
    std::vector<GroupElement> queue{GroupElement::identity(sys)};
    ElementSet seen{queue[0]};
    for (std::size_t k = 0; k < queue.size() && queue.size() <= effort.max_nodes; ++k) {
        const GroupElement& u = queue[k];
        bool ok = true;
        for (const auto& h : L.cons_) ok = ok && satisfies(u, h);
        if (ok) {
            L.witness_ = u;
            return L;
        }
        for (int i = 0; i < sys.rank(); ++i) {
            GroupElement v = queue[k].left_mul(i);
            bool keep = true;
            for (const auto& h : L.cons_)
                if (h.sign > 0) keep = keep && satisfies(v, h);
            if (keep && seen.insert(v).second) queue.push_back(v);
        }
    }
    throw std::runtime_error("halfspaces: no witness found within the search bound");
}

bool ConvexSet::cone_certificate(const RootVector& beta) const {
    std::vector<RootVector> P;
    for (const auto& h : cons_) P.push_back(h.sign > 0 ? h.root : negate(h.root));
    std::size_t m = P.size(), n = beta.size();
    const Field& f = sys_->field();
    // Solve beta = sum_{k in S} lambda_k P_k for independent subsets S.
    auto solve = [&](const std::vector<std::size_t>& S) -> bool {
        std::size_t s = S.size();
        std::vector<std::vector<Scalar>> A(n, std::vector<Scalar>(s + 1, Scalar(f, Rational(0))));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < s; ++c) A[r][c] = P[S[c]][r];
            A[r][s] = beta[r];
        }
        std::size_t row = 0;
        std::vector<std::size_t> pivcol;
        for (std::size_t c = 0; c < s; ++c) {
            std::size_t p = row;
            while (p < n && A[p][c].is_zero()) ++p;
            if (p == n) return false;  // dependent subset; a smaller one covers it
            std::swap(A[p], A[row]);
            Scalar inv = A[row][c].inverse();
            for (std::size_t k = c; k <= s; ++k) A[row][k] *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == row || A[r][c].is_zero()) continue;
                Scalar t = A[r][c];
                for (std::size_t k = c; k <= s; ++k) A[r][k] -= t * A[row][k];
            }
            pivcol.push_back(c);
            ++row;
        }
        for (std::size_t r = row; r < n; ++r)
            if (!A[r][s].is_zero()) return false;
        for (std::size_t r = 0; r < row; ++r)
            if (A[r][s].sign() < 0) return false;
        return true;
    };
    if (m <= 16) {
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<std::size_t> S;
            for (std::size_t k = 0; k < m; ++k)
                if (mask >> k & 1u) S.push_back(k);
            if (S.size() > n) continue;
            if (solve(S)) return true;
        }
        return false;
    }
    std::vector<std::size_t> all(m);
    for (std::size_t k = 0; k < m; ++k) all[k] = k;
    return m <= n && solve(all);
}

Tri ConvexSet::halfspace_query(const RootVector& beta, const Effort& effort) const {
    // Yes: beta is a nonnegative combination of roots positive on all of L,
    // so w beta is a nonnegative combination of positive roots for w in L.
    if (cone_certificate(beta)) return Tri::Yes;
    // No: a member of L that negates beta.
    std::vector<GroupElement> queue{witness_};
    std::vector<int> dist{0};
    ElementSet seen{witness_};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        if (leading_sign(queue[k].act(beta)) < 0) return Tri::No;
        if (dist[k] >= effort.radius || queue.size() >= effort.max_nodes) continue;
        for (int i = 0; i < sys_->rank(); ++i) {
            GroupElement v = queue[k].left_mul(i);
            bool keep = true;
            for (const auto& h : cons_) keep = keep && satisfies(v, h);
            if (keep && seen.insert(v).second) {
                queue.push_back(v);
                dist.push_back(dist[k] + 1);
            }
        }
    }
    return Tri::Unknown;
}

Tri ConvexSet::in_RL(const RootVector& beta) const { return in_RL(beta, effort_); }

Tri ConvexSet::in_RL(const RootVector& beta, const Effort& effort) const {
    if (hull_) {
        for (const auto& w : gens_)
            if (leading_sign(w.act(beta)) < 0) return Tri::No;
        return Tri::Yes;
    }
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->memo.find(beta);
        if (it != cache_->memo.end()) return it->second;
    }
    Tri t = halfspace_query(beta, effort);
    // Unknown depends on the effort, so only decided answers are cached.
    if (t == Tri::Unknown) return t;
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->memo.emplace(beta, t);
    return t;
}

bool ConvexSet::contains(const GroupElement& u) const {
    if (!hull_) {
        for (const auto& h : cons_)
            if (!satisfies(u, h)) return false;
        return true;
    }
    for (const auto& g : gens_)
        if (g == u) return true;
    return separators(*this, u).roots.empty();
}

std::vector<GroupElement> hull_expand(const CoxeterSystem& sys, const std::vector<GroupElement>& generators) {
    // The hull is connected in the Cayley graph, and for x in it, s_i x lies in
    // it iff x^{-1} alpha_i is not in R(K) = R(hull K).
    std::vector<GroupElement> out;
    if (generators.empty()) return out;
    ElementSet in;
    auto add = [&](const GroupElement& g) {
        if (in.insert(g).second) out.push_back(g);
    };
    add(generators.front());
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i < sys.rank(); ++i) {
            RootVector beta = out[k].inv_image_of_simple(i);
            for (const auto& g : generators)
                if (leading_sign(g.act(beta)) < 0) {
                    add(out[k].left_mul(i));
                    break;
                }
        }
    for (const auto& g : generators)
        if (!in.count(g)) throw std::logic_error("hull_expand: generator not reached");
    return out;
}

SeparatorSet separators(const ConvexSet& L, const GroupElement& u) {
    SeparatorSet out;
    const GroupElement& w0 = L.base();
    GroupElement g = u * w0.inverse();
    for (const auto& gamma : inversion_roots(g)) {
        RootVector beta = w0.act_inv(gamma);
        Tri t = L.in_RL(beta);
        if (t == Tri::Yes)
            out.roots.insert(beta);
        else if (t == Tri::Unknown)
            out.complete = false;
    }
    return out;
}

Stratum stratum_of(const ConvexSet& L, const GroupElement& u, std::size_t cap) {
    Stratum s;
    s.sep = separators(L, u);
    s.members.push_back(u);
    ElementSet seen{u};
    for (std::size_t k = 0; k < s.members.size(); ++k) {
        for (int i = 0; i < L.system().rank(); ++i) {
            GroupElement v = s.members[k].left_mul(i);
            if (seen.count(v)) continue;
            seen.insert(v);
            SeparatorSet sv = separators(L, v);
            if (!sv.complete) s.complete = false;
            if (!(sv == s.sep)) continue;
            if (s.members.size() >= cap) {
                s.complete = false;
                return s;
            }
            s.members.push_back(v);
        }
    }
    s.complete = s.complete && s.sep.complete;
    return s;
}

RootSet transmitting_roots(const ConvexSet& L, const Stratum& s) {
    RootSet out;
    for (const auto& w : s.members)
        for (int i = 0; i < L.system().rank(); ++i) {
            RootVector b = negate(w.inv_image_of_simple(i));
            if (s.sep.roots.contains(b)) out.insert(b);
        }
    return out;
}

namespace {

struct LabeledDigraph {
    std::vector<GroupElement> vertices;
    std::vector<bool> has_out;               // vertex lies in Q
    std::vector<std::vector<int>> out;       // out[v][i] = target, or -1
    std::vector<std::multiset<std::pair<int, bool>>> in_sig;  // (label, source in Q)
};

LabeledDigraph build_D(const ConvexSet& L, const std::vector<GroupElement>& Q) {
    LabeledDigraph D;
    std::unordered_map<GroupElement, int, ElementHash> id;
    auto vid = [&](const GroupElement& g) {
        auto it = id.find(g);
        if (it != id.end()) return it->second;
        int k = static_cast<int>(D.vertices.size());
        id.emplace(g, k);
        D.vertices.push_back(g);
        D.has_out.push_back(false);
        D.out.emplace_back(static_cast<std::size_t>(L.system().rank()), -1);
        return k;
    };
    for (const auto& u : Q) D.has_out[static_cast<std::size_t>(vid(u))] = true;
    for (const auto& u : Q) {
        int a = vid(u);
        for (int i = 0; i < L.system().rank(); ++i) {
            int b = vid(toggle(L, i, u));
            D.out[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = b;
        }
    }
    D.in_sig.assign(D.vertices.size(), {});
    for (std::size_t a = 0; a < D.vertices.size(); ++a)
        for (std::size_t i = 0; i < D.out[a].size(); ++i)
            if (D.out[a][i] >= 0) D.in_sig[static_cast<std::size_t>(D.out[a][i])].insert({static_cast<int>(i), true});
    return D;
}

}  // namespace

bool tau_equivalent(const ConvexSet& L, const std::vector<GroupElement>& Q, const std::vector<GroupElement>& Q2) {
    LabeledDigraph A = build_D(L, Q), B = build_D(L, Q2);
    std::size_t nv = A.vertices.size();
    if (nv != B.vertices.size()) return false;
    auto signature = [](const LabeledDigraph& D, std::size_t v) {
        std::vector<int> loops;
        for (std::size_t i = 0; i < D.out[v].size(); ++i)
            loops.push_back(D.out[v][i] == static_cast<int>(v) ? 1 : (D.out[v][i] < 0 ? -1 : 0));
        return std::make_tuple(D.has_out[v], loops, D.in_sig[v]);
    };
    {
        std::multiset<decltype(signature(A, 0))> sa, sb;
        for (std::size_t v = 0; v < nv; ++v) {
            sa.insert(signature(A, v));
            sb.insert(signature(B, v));
        }
        if (sa != sb) return false;
    }
    std::vector<int> fwd(nv, -1), bwd(nv, -1);
    // Map a -> b and propagate along (functional) out-edges; record changes for undo.
    std::function<bool(std::size_t, std::size_t, std::vector<std::size_t>&)> assign =
        [&](std::size_t a, std::size_t b, std::vector<std::size_t>& trail) -> bool {
        if (fwd[a] >= 0) return fwd[a] == static_cast<int>(b);
        if (bwd[b] >= 0) return false;
        if (signature(A, a) != signature(B, b)) return false;
        fwd[a] = static_cast<int>(b);
        bwd[b] = static_cast<int>(a);
        trail.push_back(a);
        for (std::size_t i = 0; i < A.out[a].size(); ++i) {
            int ta = A.out[a][i], tb = B.out[b][i];
            if ((ta < 0) != (tb < 0)) return false;
            if (ta >= 0 && !assign(static_cast<std::size_t>(ta), static_cast<std::size_t>(tb), trail)) return false;
        }
        return true;
    };
    std::function<bool()> search = [&]() -> bool {
        std::size_t a = nv;
        for (std::size_t v = 0; v < nv; ++v)
            if (fwd[v] < 0 && A.has_out[v]) {
                a = v;
                break;
            }
        if (a == nv) {
            for (std::size_t v = 0; v < nv; ++v)
                if (fwd[v] < 0) return false;  // unreachable: every vertex is in Q or an image
            return true;
        }
        for (std::size_t b = 0; b < nv; ++b) {
            if (bwd[b] >= 0 || !B.has_out[b]) continue;
            std::vector<std::size_t> trail;
            if (assign(a, b, trail) && search()) return true;
            for (std::size_t x : trail) {
                bwd[static_cast<std::size_t>(fwd[x])] = -1;
                fwd[x] = -1;
            }
        }
        return false;
    };
    return search();
}

}  // namespace bkb
