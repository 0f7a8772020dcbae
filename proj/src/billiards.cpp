#include "bkb/billiards.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace bkb {

GroupElement toggle(const ConvexSet& L, int i, const GroupElement& u) {
    RootVector beta = u.inv_image_of_simple(i);
    switch (L.in_RL(beta)) {
        case Tri::Yes: return u;
        case Tri::No: return u.left_mul(i);
        default:
            throw OracleUndecided("membership of " + root_str(L.system(), beta) + " in R(L) is undecided", beta);
    }
}

GroupElement apply_toggle_word(const ConvexSet& L, const Word& word, const GroupElement& u) {
    GroupElement g = u;
    for (int i : word) g = toggle(L, i, g);
    return g;
}

GroupElement pro_c(const ConvexSet& L, const Word& ordering, const GroupElement& u) {
    return apply_toggle_word(L, ordering, u);
}

TrajectoryRecord run_trajectory(const ConvexSet& L, const Word& ordering, const GroupElement& u0, int max_steps,
                                bool stop_at_period) {
    TrajectoryRecord rec;
    rec.ordering = ordering;
    rec.start = u0;
    if (ordering.empty()) return rec;
    std::unordered_map<GroupElement, int, ElementHash> at_boundary{{u0, 0}};
    GroupElement u = u0;
    int n = static_cast<int>(ordering.size());
    for (int j = 1; j <= max_steps; ++j) {
        int i = ordering[static_cast<std::size_t>((j - 1) % n)];
        TrajectoryStep st;
        st.index = j;
        st.label = i;
        st.root = u.inv_image_of_simple(i);
        Tri t = L.in_RL(st.root);
        if (t == Tri::Unknown)
            throw OracleUndecided("trajectory step " + std::to_string(j) + ": membership of " +
                                      root_str(L.system(), st.root) + " in R(L) is undecided",
                                  st.root);
        st.action = t == Tri::Yes ? Action::Reflect : Action::Cross;
        if (st.action == Action::Cross) u = u.left_mul(i);
        st.after = u;
        rec.steps.push_back(std::move(st));
        if (j % n == 0 && !rec.period) {
            int k = j / n;
            auto [it, fresh] = at_boundary.emplace(u, k);
            if (!fresh) {
                rec.preperiod = it->second;
                rec.period = k - it->second;
                if (stop_at_period) break;
            }
        }
    }
    return rec;
}

std::string trajectory_tsv(const CoxeterSystem& sys, const TrajectoryRecord& rec) {
    std::ostringstream os;
    os << "step\tlabel\taction\telement\troot\n";
    for (const auto& st : rec.steps) {
        os << st.index << '\t' << sys.label(st.label) << '\t' << (st.action == Action::Cross ? "cross" : "reflect") << '\t'
           << sys.word_str(reduced_word(st.after)) << '\t';
        for (std::size_t k = 0; k < st.root.size(); ++k) os << (k ? "," : "") << st.root[k].str();
        os << '\n';
    }
    return os.str();
}

const char* verdict_str(HeavyVerdict::Kind k) {
    switch (k) {
        case HeavyVerdict::NotHeavy: return "not-heavy";
        case HeavyVerdict::HeavyUpToBound: return "heavy-up-to-bound";
        default: return "inconclusive";
    }
}

namespace {

std::string sep_key(const SeparatorSet& s) {
    std::vector<std::string> parts;
    for (const auto& r : s.roots) {
        std::string p;
        for (const auto& x : r) p += x.str() + ",";
        parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + ";";
    return out;
}

}  // namespace

HeavyVerdict is_heavy_bounded(const ConvexSet& L, const Word& ordering, const HeavyBounds& bounds) {
    HeavyVerdict v;
    v.kind = HeavyVerdict::HeavyUpToBound;
    if (!L.is_hull()) {
        v.kind = HeavyVerdict::Inconclusive;
        v.note = "heaviness search needs a hull presentation";
        return v;
    }
    const CoxeterSystem& sys = L.system();
    std::vector<GroupElement> seeds{GroupElement::identity(sys)};
    ElementSet seen{seeds[0]};
    for (const auto& b : ball(sys, bounds.radius))
        for (const auto& g : L.generators()) {
            GroupElement s = b * g;
            if (seen.insert(s).second) seeds.push_back(s);
            if (seeds.size() >= bounds.max_seeds) break;
        }
    std::map<std::string, bool> done;  // Sep key -> processed
    std::vector<Stratum> reps;
    for (const auto& u : seeds) {
        SeparatorSet s = separators(L, u);
        if (s.roots.empty()) continue;  // u in L
        std::string key = sep_key(s);
        if (done.count(key)) continue;
        done[key] = true;
        Stratum st = stratum_of(L, u, bounds.stratum_cap);
        if (!st.complete) {
            v.kind = HeavyVerdict::Inconclusive;
            v.note = "stratum truncated at cap";
            continue;
        }
        bool dup = false;
        for (const auto& r : reps)
            if (r.members.size() == st.members.size() && tau_equivalent(L, r.members, st.members)) {
                dup = true;
                break;
            }
        if (dup) continue;
        ++v.strata_searched;
        // Pro_c as a partial function on the stratum; periodic points are on its cycles.
        std::unordered_map<GroupElement, std::size_t, ElementHash> pos;
        for (std::size_t k = 0; k < st.members.size(); ++k) pos.emplace(st.members[k], k);
        std::vector<long> next(st.members.size(), -1);
        for (std::size_t k = 0; k < st.members.size(); ++k) {
            auto it = pos.find(pro_c(L, ordering, st.members[k]));
            if (it != pos.end()) next[k] = static_cast<long>(it->second);
        }
        std::vector<int> state(st.members.size(), 0);  // 0 new, 1 on path, 2 finished
        for (std::size_t k = 0; k < st.members.size(); ++k) {
            if (state[k]) continue;
            std::vector<std::size_t> path;
            long x = static_cast<long>(k);
            while (x >= 0 && state[static_cast<std::size_t>(x)] == 0) {
                state[static_cast<std::size_t>(x)] = 1;
                path.push_back(static_cast<std::size_t>(x));
                x = next[static_cast<std::size_t>(x)];
            }
            if (x >= 0 && state[static_cast<std::size_t>(x)] == 1) {
                std::size_t start = static_cast<std::size_t>(x);
                int period = 0;
                for (auto it = path.rbegin(); it != path.rend(); ++it) {
                    ++period;
                    if (*it == start) break;
                }
                v.kind = HeavyVerdict::NotHeavy;
                v.witness = st.members[start];
                v.period = period;
                return v;
            }
            for (auto p : path) state[p] = 2;
        }
        reps.push_back(std::move(st));
    }
    return v;
}

bool sort_check(const ConvexSet& L, const Word& word) {
    const CoxeterSystem& sys = L.system();
    ElementSet hull;
    for (auto& g : hull_expand(sys, L.generators())) hull.insert(g);
    ElementSet image;
    for (const auto& u : enumerate_group(sys)) image.insert(apply_toggle_word(L, word, u));
    if (image.size() != hull.size()) return false;
    for (const auto& g : image)
        if (!hull.count(g)) return false;
    return true;
}

}  // namespace bkb
