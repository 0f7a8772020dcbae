#pragma once

// Noninvertible Bender-Knuth toggles, Pro_c, billiards trajectories and the
// bounded heaviness search.

#include "bkb/convex.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkb {

class OracleUndecided : public std::runtime_error {
public:
    OracleUndecided(const std::string& what, RootVector root) : std::runtime_error(what), root(std::move(root)) {}
    RootVector root;
};

// u if u^{-1} alpha_i is in R(L), else s_i u.
GroupElement toggle(const ConvexSet& L, int i, const GroupElement& u);
GroupElement apply_toggle_word(const ConvexSet& L, const Word& word, const GroupElement& u);
GroupElement pro_c(const ConvexSet& L, const Word& ordering, const GroupElement& u);

enum class Action { Cross, Reflect };

struct TrajectoryStep {
    int index = 0;  // 1-based step number j
    int label = 0;  // i_j
    Action action = Action::Cross;
    GroupElement after;
    RootVector root;  // u_{j-1}^{-1} alpha_{i_j}
};

struct TrajectoryRecord {
    Word ordering;
    GroupElement start;
    std::vector<TrajectoryStep> steps;
    // In Pro_c applications, when a repeat was seen at a multiple of |I| steps.
    std::optional<int> preperiod;
    std::optional<int> period;
};

// Runs until max_steps, stopping early once a period is detected.
TrajectoryRecord run_trajectory(const ConvexSet& L, const Word& ordering, const GroupElement& u0, int max_steps,
                                bool stop_at_period = true);

// TSV with header: step, label, action, element (application-order word), root.
std::string trajectory_tsv(const CoxeterSystem& sys, const TrajectoryRecord& rec);

struct HeavyBounds {
    int radius = 2;                // seed ball around the generators
    std::size_t stratum_cap = 5000;
    std::size_t max_seeds = 20000;
    int max_period = 1000;          // Pro_c applications per stratum member
};

struct HeavyVerdict {
    enum Kind { NotHeavy, HeavyUpToBound, Inconclusive } kind = Inconclusive;
    std::optional<GroupElement> witness;
    int period = 0;
    std::size_t strata_searched = 0;
    std::string note;
};
const char* verdict_str(HeavyVerdict::Kind k);

HeavyVerdict is_heavy_bounded(const ConvexSet& L, const Word& ordering, const HeavyBounds& bounds = {});

// tau_word(W) == hull_expand(generators), for finite W and a hull L.
bool sort_check(const ConvexSet& L, const Word& word);

}  // namespace bkb
