#include "bkb/walkgraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace bkb {

const char* solidity_str(Solidity s) {
    switch (s) {
        case Solidity::Solid: return "solid";
        case Solidity::Dotted: return "dotted";
        default: return "unknown";
    }
}

std::optional<int> SmallRootGraph::vertex_of(const RootVector& v) const {
    auto k = roots.index_of(v);
    if (!k) return std::nullopt;
    return static_cast<int>(*k);
}

std::string SmallRootGraph::vertex_name(int v) const {
    if (v == neg()) return "NEG";
    return root_str(*sys, roots.items()[static_cast<std::size_t>(v)]);
}

const GraphEdge* SmallRootGraph::edge_from(int v, int i) const {
    for (int e : out[static_cast<std::size_t>(v)])
        if (edges[static_cast<std::size_t>(e)].label == i) return &edges[static_cast<std::size_t>(e)];
    return nullptr;
}

namespace {

std::vector<int> support(const RootVector& v) {
    std::vector<int> s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.push_back(static_cast<int>(k));
    return s;
}

// v = eps * alpha_k for a signed simple root; returns (k, eps).
std::optional<std::pair<int, int>> as_signed_simple(const RootVector& v) {
    std::optional<std::pair<int, int>> r;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (r || !v[k].is_rational()) return std::nullopt;
        Rational q = v[k].rational_value();
        if (q == 1)
            r = std::make_pair(static_cast<int>(k), 1);
        else if (q == -1)
            r = std::make_pair(static_cast<int>(k), -1);
        else
            return std::nullopt;
    }
    return r;
}

class FinitenessCache {
public:
    explicit FinitenessCache(const CoxeterSystem& sys) : sys_(sys) {}
    bool finite(std::vector<int> J) {
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
        auto it = memo_.find(J);
        if (it != memo_.end()) return it->second;
        bool f = J.empty() || is_finite(parabolic(sys_, J));
        memo_[J] = f;
        return f;
    }

private:
    const CoxeterSystem& sys_;
    std::map<std::vector<int>, bool> memo_;
};

// Rule (c) data: each ball element v with its preimages of simple roots.
struct BallEntry {
    GroupElement v;
    std::vector<RootVector> pre;  // v^{-1} alpha_a
};

class SolidSearch {
public:
    SolidSearch(const CoxeterSystem& sys, const GraphBounds& bounds)
        : sys_(sys), fin_(sys), positives_(positive_roots(sys, bounds.universe_depth)) {
        for (auto& v : ball(sys, bounds.search_radius)) {
            BallEntry e{v, {}};
            for (int a = 0; a < sys.rank(); ++a) {
                e.pre.push_back(v.inv_image_of_simple(a));
                by_preimage_[e.pre.back()].push_back({entries_.size(), a});
                by_preimage_[negate(e.pre.back())].push_back({entries_.size(), a});
            }
            entries_.push_back(std::move(e));
        }
    }

    bool rule_b(const RootVector& gamma, int i) const {
        RootVector ai = simple_root(sys_, i);
        for (const auto& gp : positives_) {
            if (gp == gamma) continue;
            auto c = nonneg_combination(gamma, gp, ai);
            if (c && c->first.sign() > 0) return true;
        }
        return false;
    }

    // Empty triple intersection H+_{gamma'} H-_{gamma} H+_{alpha_i}, witnessed by
    // some v sending all three roots to signed simple roots.
    bool rule_c(const RootVector& gamma, int i) {
        auto it = by_preimage_.find(gamma);
        if (it == by_preimage_.end()) return false;
        for (const auto& hit : it->second) {
            const BallEntry& e = entries_[hit.first];
            auto vg = as_signed_simple(e.v.act(gamma));
            auto vi = as_signed_simple(e.v.image_of_simple(i));
            if (!vg || !vi) continue;
            for (int a = 0; a < sys_.rank(); ++a) {
                if (a == vg->first) continue;
                // gamma' = +-v^{-1} alpha_a, made positive
                int eps = is_positive(e.pre[static_cast<std::size_t>(a)]) ? 1 : -1;
                std::vector<int> req, forb;
                auto place = [&](int k, int sigma_eps) { (sigma_eps < 0 ? req : forb).push_back(k); };
                place(a, +1 * eps);
                place(vg->first, -1 * vg->second);
                place(vi->first, +1 * vi->second);
                bool clash = false;
                for (int r : req)
                    if (std::find(forb.begin(), forb.end(), r) != forb.end()) clash = true;
                if (clash || !fin_.finite(req)) return true;
            }
        }
        return false;
    }

private:
    const CoxeterSystem& sys_;
    FinitenessCache fin_;
    RootSet positives_;
    std::vector<BallEntry> entries_;
    std::unordered_map<RootVector, std::vector<std::pair<std::size_t, int>>, RootHash> by_preimage_;
};

bool rank2_dotted_family(const CoxeterSystem& sys, const RootVector& gamma, int i) {
    std::vector<int> s = support(gamma);
    if (s.size() > 2 || std::find(s.begin(), s.end(), i) != s.end()) return false;
    if (s.size() == 1) return sys.m(i, s[0]) != kInf;
    return sys.m(i, s[0]) == 2 && sys.m(i, s[1]) == 2 && sys.m(s[0], s[1]) != kInf;
}

}  // namespace

SmallRootGraph build_graph(const CoxeterSystem& sys, const GraphBounds& bounds) {
    SmallRootGraph g;
    g.sys = &sys;
    g.roots = small_roots(sys);
    g.out.assign(static_cast<std::size_t>(g.vertex_count()), {});
    SolidSearch search(sys, bounds);
    const auto& items = g.roots.items();
    for (std::size_t v = 0; v < items.size(); ++v) {
        const RootVector& gamma = items[v];
        for (int i = 0; i < sys.rank(); ++i) {
            GraphEdge e;
            e.source = static_cast<int>(v);
            e.label = i;
            if (gamma == simple_root(sys, i)) {
                e.target = g.neg();
                e.solidity = Solidity::Solid;
                e.rule = 'n';
            } else {
                auto t = g.vertex_of(apply_simple(sys, i, gamma));
                if (!t) continue;
                e.target = *t;
                char solid = 0, dotted = 0;
                if (bilinear_simple(sys, gamma, i).sign() > 0)
                    solid = 'a';
                else if (search.rule_b(gamma, i))
                    solid = 'b';
                else if (search.rule_c(gamma, i))
                    solid = 'c';
                if (gamma[static_cast<std::size_t>(i)].is_zero())
                    dotted = 'd';
                else if (rank2_dotted_family(sys, gamma, i))
                    dotted = 'e';
                if (solid && dotted) ++g.conflicts;
                if (solid) {
                    e.solidity = Solidity::Solid;
                    e.rule = solid;
                } else if (dotted) {
                    e.solidity = Solidity::Dotted;
                    e.rule = dotted;
                } else {
                    e.solidity = Solidity::Unknown;
                    e.rule = 'f';
                    ++g.unknown;
                }
            }
            g.out[v].push_back(static_cast<int>(g.edges.size()));
            g.edges.push_back(e);
        }
    }
    return g;
}

std::string graph_dot(const SmallRootGraph& g) {
    std::ostringstream os;
    os << "digraph small_roots {\n";
    for (int v = 0; v < g.neg(); ++v) os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    os << "  NEG [label=\"NEG\"];\n";
    auto node = [&](int v) { return v == g.neg() ? std::string("NEG") : "v" + std::to_string(v); };
    for (const auto& e : g.edges) {
        os << "  " << node(e.source) << " -> " << node(e.target) << " [label=\"" << g.sys->label(e.label)
           << "\", style=" << (e.solidity == Solidity::Dotted ? "dashed" : "solid");
        if (e.solidity == Solidity::Unknown) os << ", color=red";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_edge_list(const SmallRootGraph& g) {
    std::ostringstream os;
    for (const auto& e : g.edges)
        os << g.vertex_name(e.source) << '\t' << g.sys->label(e.label) << '\t' << g.vertex_name(e.target) << '\t'
           << solidity_str(e.solidity) << '\n';
    return os.str();
}

bool betwixt(const Word& ordering, int i, int ip, int ipp) {
    auto pos = [&](int x) {
        auto it = std::find(ordering.begin(), ordering.end(), x);
        if (it == ordering.end()) throw std::invalid_argument("betwixt: index not in ordering");
        return it - ordering.begin();
    };
    auto j = pos(i), jp = pos(ip), jpp = pos(ipp);
    return (j < jp && jp < jpp) || (jp < jpp && jpp <= j) || (jpp <= j && j < jp);
}

namespace {

// Precomputed condition (i): ok[v][prev][next].
struct SolidTable {
    int n = 0;
    std::vector<char> ok;
    SolidTable(const SmallRootGraph& g, const Word& ordering) : n(g.sys->rank()) {
        ok.assign(static_cast<std::size_t>(g.vertex_count() * n * n), 1);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int e : g.out[static_cast<std::size_t>(v)]) {
                        const GraphEdge& ed = g.edges[static_cast<std::size_t>(e)];
                        if (ed.solidity == Solidity::Solid && betwixt(ordering, p, ed.label, q)) {
                            ok[idx(v, p, q)] = 0;
                            break;
                        }
                    }
    }
    std::size_t idx(int v, int p, int q) const { return static_cast<std::size_t>((v * n + p) * n + q); }
    bool at(int v, int p, int q) const { return ok[idx(v, p, q)] != 0; }
};

bool identity_product(const CoxeterSystem& sys, const SmallRootGraph& g, const ClosedWalk& w) {
    Word labels;
    for (int e : w.edges) labels.push_back(g.edges[static_cast<std::size_t>(e)].label);
    return element_of(sys, labels).is_identity();
}

}  // namespace

bool satisfies_solid_condition(const SmallRootGraph& g, const Word& ordering, const ClosedWalk& w) {
    std::size_t d = w.edges.size();
    if (d == 0 || w.vertices.size() != d) return false;
    for (std::size_t k = 0; k < d; ++k) {
        const GraphEdge& e = g.edges[static_cast<std::size_t>(w.edges[k])];
        if (e.source != w.vertices[k] || e.target != w.vertices[(k + 1) % d]) return false;
    }
    for (std::size_t k = 0; k < d; ++k) {
        int prev = g.edges[static_cast<std::size_t>(w.edges[(k + d - 1) % d])].label;
        int next = g.edges[static_cast<std::size_t>(w.edges[k])].label;
        for (int e : g.out[static_cast<std::size_t>(w.vertices[k])]) {
            const GraphEdge& ed = g.edges[static_cast<std::size_t>(e)];
            if (ed.solidity == Solidity::Solid && betwixt(ordering, prev, ed.label, next)) return false;
        }
    }
    return true;
}

bool is_plausible(const SmallRootGraph& g, const Word& ordering, const ClosedWalk& w) {
    return satisfies_solid_condition(g, ordering, w) && identity_product(*g.sys, g, w);
}

WalkSearchResult search_plausible_walks(const SmallRootGraph& g, const Word& ordering, int max_len,
                                        bool require_identity, std::size_t max_results) {
    const CoxeterSystem& sys = *g.sys;
    const int n = sys.rank();
    const int V = g.neg();  // walks never reach the negative vertex
    WalkSearchResult res;
    SolidTable table(g, ordering);
    std::vector<double> Bd(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) Bd[static_cast<std::size_t>(a * n + b)] = sys.B(a, b).approx();

    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::size_t, ClosedWalk>> found;

    for (int s = 0; s < V && !res.truncated; ++s) {
        // Distances to s inside the vertices >= s, for pruning.
        std::vector<int> dist(static_cast<std::size_t>(V), 1 << 20);
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(V));
        for (const auto& e : g.edges)
            if (e.target < V && e.source >= s && e.target >= s) rev[static_cast<std::size_t>(e.target)].push_back(e.source);
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : rev[static_cast<std::size_t>(x)])
                if (dist[static_cast<std::size_t>(y)] > dist[static_cast<std::size_t>(x)] + 1) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    q.push_back(y);
                }
        }

        std::vector<int> vs{s}, es;
        // Columns of the prefix product s_{l1}...s_{lk}; column j is P alpha_j.
        std::vector<double> P(static_cast<std::size_t>(n * n), 0.0);
        for (int a = 0; a < n; ++a) P[static_cast<std::size_t>(a * n + a)] = 1.0;
        int len = 0;

        auto col_sign = [&](const std::vector<double>& M, int c) {
            double best = 0;
            for (int r = 0; r < n; ++r)
                if (std::fabs(M[static_cast<std::size_t>(r * n + c)]) > std::fabs(best)) best = M[static_cast<std::size_t>(r * n + c)];
            return best > 0 ? 1 : -1;
        };

        std::function<void()> dfs = [&]() {
            if (res.truncated) return;
            ++res.nodes;
            int v = vs.back();
            int depth = static_cast<int>(es.size());
            for (int ei : g.out[static_cast<std::size_t>(v)]) {
                const GraphEdge& e = g.edges[static_cast<std::size_t>(ei)];
                if (e.target >= V || e.target < s) continue;
                int remaining = max_len - depth - 1;
                if (dist[static_cast<std::size_t>(e.target)] > remaining) continue;
                if (depth > 0) {
                    int prev = g.edges[static_cast<std::size_t>(es.back())].label;
                    if (!table.at(v, prev, e.label)) continue;
                }
                int l = e.label;
                int step = col_sign(P, l) > 0 ? 1 : -1;
                if (require_identity && len + step > remaining) continue;
                std::vector<double> saved = P;
                for (int j = 0; j < n; ++j) {
                    double c = 2 * Bd[static_cast<std::size_t>(l * n + j)];
                    if (c == 0) continue;
                    for (int r = 0; r < n; ++r)
                        P[static_cast<std::size_t>(r * n + j)] -= c * saved[static_cast<std::size_t>(r * n + l)];
                }
                len += step;
                es.push_back(ei);
                if (e.target == s) {
                    int last = l, first = g.edges[static_cast<std::size_t>(es.front())].label;
                    if (table.at(s, last, first) && (!require_identity || len == 0)) {
                        ClosedWalk w{vs, es};
                        if (!require_identity || identity_product(sys, g, w)) {
                            // canonical rotation
                            std::vector<int> best;
                            std::size_t d = w.edges.size(), rot = 0;
                            for (std::size_t r = 0; r < d; ++r) {
                                std::vector<int> cand;
                                for (std::size_t k = 0; k < d; ++k) cand.push_back(w.edges[(r + k) % d]);
                                if (best.empty() || cand < best) {
                                    best = cand;
                                    rot = r;
                                }
                            }
                            if (seen.insert(best).second) {
                                ClosedWalk c;
                                for (std::size_t k = 0; k < d; ++k) {
                                    c.vertices.push_back(w.vertices[(rot + k) % d]);
                                    c.edges.push_back(w.edges[(rot + k) % d]);
                                }
                                found.emplace_back(found.size(), std::move(c));
                                if (found.size() >= max_results) res.truncated = true;
                            }
                        }
                    }
                }
                if (remaining > 0 && !res.truncated) {
                    vs.push_back(e.target);
                    dfs();
                    vs.pop_back();
                }
                es.pop_back();
                len -= step;
                P = std::move(saved);
            }
        };
        dfs();
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.second.edges.size() != b.second.edges.size()) return a.second.edges.size() < b.second.edges.size();
        return a.second.edges < b.second.edges;
    });
    for (auto& f : found) res.walks.push_back(std::move(f.second));
    return res;
}

std::string walk_str(const SmallRootGraph& g, const ClosedWalk& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.edges.size(); ++k) {
        const GraphEdge& e = g.edges[static_cast<std::size_t>(w.edges[k])];
        os << g.vertex_name(w.vertices[k]) << " -" << g.sys->label(e.label) << "-> ";
    }
    os << g.vertex_name(w.vertices.front());
    return os.str();
}

std::string trajectory_digest(const CoxeterSystem& sys, const TrajectoryRecord& rec) {
    std::string text = trajectory_tsv(sys, rec);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

TrajectoryRecord replay(const WalkCertificate& c) {
    int steps = c.period * static_cast<int>(c.ordering.size());
    return run_trajectory(c.L, c.ordering, c.u0, steps, false);
}

bool sign_of_image(const GroupElement& w, const RootVector& beta) {
    // w beta is a root, so any nonzero coordinate gives its sign.
    int n = w.rank();
    for (int r = 0; r < n; ++r) {
        Scalar s;
        for (int c = 0; c < n; ++c)
            if (!beta[static_cast<std::size_t>(c)].is_zero()) s = s + w.entry(r, c) * beta[static_cast<std::size_t>(c)];
        if (!s.is_zero()) return s.sign() > 0;
    }
    throw std::logic_error("sign_of_image: zero vector");
}

}  // namespace

WalkCertificate certificate_of(const Counterexample& ex) {
    WalkCertificate c{ex.sys, ex.ordering, ex.u0, ex.L, ex.period, ""};
    c.digest = trajectory_digest(*ex.sys, replay(c));
    return c;
}

CertificateCheck verify_certificate(const WalkCertificate& cert) {
    CertificateCheck out;
    if (cert.period <= 0 || cert.ordering.empty()) {
        out.message = "period and ordering must be nonempty";
        return out;
    }
    if (cert.L.contains(cert.u0)) {
        out.message = "u0 lies in L";
        return out;
    }
    TrajectoryRecord rec;
    try {
        rec = replay(cert);
    } catch (const OracleUndecided& e) {
        out.message = e.what();
        return out;
    }
    const CoxeterSystem& sys = *cert.sys;
    int n = static_cast<int>(cert.ordering.size());
    for (int k = 1; k < cert.period; ++k)
        if (rec.steps[static_cast<std::size_t>(k * n - 1)].after == cert.u0) {
            out.message = "returns to u0 after " + std::to_string(k) + " passes, before the stated period";
            return out;
        }
    if (rec.steps.back().after != cert.u0) {
        out.message = "does not return to u0 after " + std::to_string(cert.period) + " passes";
        return out;
    }
    std::string d = trajectory_digest(sys, rec);
    if (!cert.digest.empty() && d != cert.digest) {
        out.message = "trajectory digest " + d + " differs from " + cert.digest;
        return out;
    }
    out.ok = true;
    out.message = "periodic with period " + std::to_string(cert.period);
    return out;
}

std::optional<WalkCertificate> lift_walk(SystemPtr sysp, const SmallRootGraph& g, const ClosedWalk& walk,
                                         const Word& ordering, const LiftBounds& bounds) {
    const CoxeterSystem& sys = *sysp;
    const int n = static_cast<int>(ordering.size());
    const std::size_t d = walk.edges.size();
    if (d == 0) return std::nullopt;
    std::vector<GroupElement> pool = ball(sys, bounds.radius);
    std::size_t tried = 0;

    for (std::size_t rot = 0; rot < d; ++rot) {
        std::vector<int> labels;
        for (std::size_t k = 0; k < d; ++k)
            labels.push_back(g.edges[static_cast<std::size_t>(walk.edges[(rot + k) % d])].label);
        const RootVector& start_vertex = g.roots.items()[static_cast<std::size_t>(walk.vertices[rot])];

        // skips[k] extra passes before move k; enumerated as a mixed-radix counter.
        std::vector<int> skips(d, 0);
        while (true) {
            if (++tried > bounds.max_embeddings) return std::nullopt;
            // positions (1-based) of the moves
            std::vector<long> pos;
            long j = 0;
            for (std::size_t k = 0; k < d; ++k) {
                long p = j + 1;
                while (ordering[static_cast<std::size_t>((p - 1) % n)] != labels[k]) ++p;
                p += static_cast<long>(n) * skips[k];
                pos.push_back(p);
                j = p;
            }
            long passes = (j + n - 1) / n;
            long total = passes * n;
            RootSet must_in, must_out;
            must_in.insert(negate(start_vertex));
            GroupElement u = GroupElement::identity(sys);
            std::size_t next = 0;
            for (long t = 1; t <= total; ++t) {
                int i = ordering[static_cast<std::size_t>((t - 1) % n)];
                RootVector r = u.inv_image_of_simple(i);
                if (next < d && pos[next] == t) {
                    must_out.insert(r);
                    u = u.left_mul(i);
                    ++next;
                } else {
                    must_in.insert(r);
                }
            }
            bool ok = u.is_identity();
            for (const auto& r : must_in)
                if (must_out.contains(r) || must_in.contains(negate(r))) ok = false;
            if (ok) {
                std::vector<const GroupElement*> feasible;
                for (const auto& w : pool) {
                    bool good = true;
                    for (const auto& b : must_in)
                        if (!sign_of_image(w, b)) {
                            good = false;
                            break;
                        }
                    if (good) feasible.push_back(&w);
                }
                std::vector<GroupElement> K;
                ElementSet Kset;
                for (const auto& delta : must_out) {
                    const GroupElement* hit = nullptr;
                    for (const auto* w : feasible)
                        if (!sign_of_image(*w, delta)) {
                            hit = w;
                            break;
                        }
                    if (!hit) {
                        ok = false;
                        break;
                    }
                    if (Kset.insert(*hit).second) K.push_back(*hit);
                }
                if (ok) {
                    WalkCertificate cert{sysp, ordering, GroupElement::identity(sys), ConvexSet::hull(sys, K),
                                         static_cast<int>(passes), ""};
                    TrajectoryRecord rec = run_trajectory(cert.L, ordering, cert.u0, static_cast<int>(total));
                    if (rec.period && *rec.preperiod == 0) {
                        cert.period = *rec.period;
                        cert.digest = trajectory_digest(sys, replay(cert));
                        if (verify_certificate(cert).ok) return cert;
                    }
                }
            }
            // advance the counter
            std::size_t k = 0;
            while (k < d && skips[k] == bounds.max_skips) skips[k++] = 0;
            if (k == d) break;
            ++skips[k];
        }
    }
    return std::nullopt;
}

bool projects_to_graph(const SmallRootGraph& g, const TrajectoryRecord& rec, const RootVector& beta) {
    GroupElement u = rec.start;
    auto gamma_of = [&](const GroupElement& x) { return g.vertex_of(negate(x.act(beta))); };
    auto cur = gamma_of(u);
    if (!cur) return false;
    for (const auto& st : rec.steps) {
        auto nxt = gamma_of(st.after);
        if (!nxt) return false;
        const GraphEdge* e = g.edge_from(*cur, st.label);
        if (st.action == Action::Cross) {
            if (!e || e->target != *nxt) return false;
        } else {
            if (*nxt != *cur) return false;
            if (e && e->solidity == Solidity::Solid) return false;
        }
        cur = nxt;
        u = st.after;
    }
    return true;
}

}  // namespace bkb
