#pragma once

// Convex subsets of W, the R(L) membership oracle, separators, strata and
// tau-equivalence.

#include "bkb/element.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bkb {

enum class Tri { No, Yes, Unknown };
const char* tri_str(Tri t);

struct Effort {
    int radius = 12;  // Cayley-graph search radius
    int depth = 8;    // root universe depth
    std::size_t max_nodes = 100000;
};

struct HalfSpace {
    RootVector root;  // a positive root
    int sign = +1;    // +1: w root > 0 on L;  -1: w root < 0 on L
};

struct SeparatorSet {
    RootSet roots;
    bool complete = true;  // false if some candidate stayed Unknown
    bool operator==(const SeparatorSet& o) const;
};

class ConvexSet {
public:
    static ConvexSet hull(const CoxeterSystem& sys, std::vector<GroupElement> generators);
    // Without a witness, one is searched for from the identity; throws if none is found.
    static ConvexSet halfspaces(const CoxeterSystem& sys, std::vector<HalfSpace> constraints,
                                std::optional<GroupElement> witness = std::nullopt, Effort effort = {});

    const CoxeterSystem& system() const { return *sys_; }
    bool is_hull() const { return hull_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::vector<HalfSpace>& constraints() const { return cons_; }
    // A member of L: the first generator, or the half-space witness.
    const GroupElement& base() const { return hull_ ? gens_.front() : witness_; }

    Tri in_RL(const RootVector& beta) const;
    Tri in_RL(const RootVector& beta, const Effort& effort) const;
    bool contains(const GroupElement& u) const;

    const Effort& effort() const { return effort_; }
    void set_effort(const Effort& e) { effort_ = e; }

private:
    Tri halfspace_query(const RootVector& beta, const Effort& effort) const;
    bool cone_certificate(const RootVector& beta) const;

    const CoxeterSystem* sys_ = nullptr;
    bool hull_ = true;
    std::vector<GroupElement> gens_;
    std::vector<HalfSpace> cons_;
    GroupElement witness_;
    Effort effort_;
    struct Cache {
        std::mutex mu;
        std::unordered_map<RootVector, Tri, RootHash> memo;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Geodesic closure of the generators (finite for finite inputs).
std::vector<GroupElement> hull_expand(const CoxeterSystem& sys, const std::vector<GroupElement>& generators);

SeparatorSet separators(const ConvexSet& L, const GroupElement& u);

struct Stratum {
    SeparatorSet sep;
    std::vector<GroupElement> members;
    bool complete = true;
};
Stratum stratum_of(const ConvexSet& L, const GroupElement& u, std::size_t cap);

RootSet transmitting_roots(const ConvexSet& L, const Stratum& s);

bool tau_equivalent(const ConvexSet& L, const std::vector<GroupElement>& Q, const std::vector<GroupElement>& Q2);

}  // namespace bkb
