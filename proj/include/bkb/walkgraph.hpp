#pragma once

// The small-root billiards graph, billiards-plausible closed walks, and
// lifting walks to verified periodic trajectories.

#include "bkb/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bkb {

enum class Solidity { Solid, Dotted, Unknown };
const char* solidity_str(Solidity s);

struct GraphEdge {
    int source = 0;
    int target = 0;  // SmallRootGraph::neg() for the negative-root vertex
    int label = 0;
    Solidity solidity = Solidity::Unknown;
    char rule = 'f';  // which classification rule decided it; 'n' for edges into the negative vertex
};

struct GraphBounds {
    int universe_depth = 8;  // positive roots tried as gamma' in rule (b)
    int search_radius = 6;   // ball searched for rule (c)
};

struct SmallRootGraph {
    const CoxeterSystem* sys = nullptr;
    RootSet roots;  // vertex k < roots.size() is roots.items()[k]
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> out;  // edge indices by source vertex
    std::size_t unknown = 0;
    std::size_t conflicts = 0;  // a solid rule and a dotted rule both fired

    int neg() const { return static_cast<int>(roots.size()); }
    int vertex_count() const { return neg() + 1; }
    std::optional<int> vertex_of(const RootVector& v) const;
    std::string vertex_name(int v) const;
    // Edge labelled i from v, if any (there is at most one).
    const GraphEdge* edge_from(int v, int i) const;
};

SmallRootGraph build_graph(const CoxeterSystem& sys, const GraphBounds& bounds = {});

// Graphviz rendering; solid/dashed style, Unknown edges coloured red.
std::string graph_dot(const SmallRootGraph& g);
// One line per edge: source, label, target, solidity.
std::string graph_edge_list(const SmallRootGraph& g);

// i' is betwixt i and i'' with respect to the cyclic ordering.
bool betwixt(const Word& ordering, int i, int ip, int ipp);

struct ClosedWalk {
    std::vector<int> vertices;
    std::vector<int> edges;  // edges[k] goes from vertices[k] to vertices[k+1 mod d]
};

// Condition (i) alone, or (i) and (ii) together.  Unknown edges count as not solid.
bool satisfies_solid_condition(const SmallRootGraph& g, const Word& ordering, const ClosedWalk& w);
bool is_plausible(const SmallRootGraph& g, const Word& ordering, const ClosedWalk& w);

struct WalkSearchResult {
    std::vector<ClosedWalk> walks;  // deduplicated up to rotation, shortest first
    bool truncated = false;
    std::size_t nodes = 0;
};

// require_identity = false drops condition (ii).
WalkSearchResult search_plausible_walks(const SmallRootGraph& g, const Word& ordering, int max_len,
                                        bool require_identity = true, std::size_t max_results = 5000);

std::string walk_str(const SmallRootGraph& g, const ClosedWalk& w);

struct WalkCertificate {
    SystemPtr sys;
    Word ordering;
    GroupElement u0;
    ConvexSet L;  // Hull(K) for lifted walks
    int period = 0;
    std::string digest;  // of the trajectory TSV over period * |I| steps
};

struct LiftBounds {
    int radius = 8;                    // ball searched for members of K
    int max_skips = 1;                 // extra full passes allowed between consecutive moves
    std::size_t max_embeddings = 4096;
};

std::optional<WalkCertificate> lift_walk(SystemPtr sys, const SmallRootGraph& g, const ClosedWalk& walk,
                                         const Word& ordering, const LiftBounds& bounds = {});

std::string trajectory_digest(const CoxeterSystem& sys, const TrajectoryRecord& rec);
WalkCertificate certificate_of(const Counterexample& ex);

struct CertificateCheck {
    bool ok = false;
    std::string message;
};
CertificateCheck verify_certificate(const WalkCertificate& cert);

// Projection of a trajectory through gamma_j = -u_j beta: moves
// follow graph edges and stays have no solid edge with the step's label.
bool projects_to_graph(const SmallRootGraph& g, const TrajectoryRecord& rec, const RootVector& beta);

}  // namespace bkb
