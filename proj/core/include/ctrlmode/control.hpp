#pragma once

#include <cstdint>
#include <vector>

#include "ctrlmode/digraph.hpp"
#include "ctrlmode/matching.hpp"

namespace ctrlmode {

/// Control type of a node. A node is an input node when it is unmatched on
/// its - copy in at least one maximum matching (equivalently, reachable from
/// some driver node by an alternating path); otherwise it is redundant.
enum class NodeKind : std::uint8_t { input, redundant };

/// Majority control mode of a network: distributed when most nodes are input
/// nodes (I_D > 0.5), centralized otherwise.
enum class ControlMode : std::uint8_t { centralized, distributed };

/// Per-node control classification for one (graph, maximum matching) pair.
/// Node kinds are a property of the graph alone; drivers and unsaturated
/// sets are properties of the particular matching.
struct Classification {
    std::vector<NodeKind> kind;       // per node
    std::vector<NodeId> drivers;      // D: nodes with no matched in-edge, ascending
    std::vector<NodeId> unsaturated;  // U: nodes with no matched out-edge, ascending
    std::size_t input_count = 0;
    bool perfect_matching = false;    // D empty; every node reported redundant
    double n_d = 0.0;                 // |D| / n  (= 1 - nu/n exactly)
    double i_d = 0.0;                 // |input| / n
};

/// Partition of the node set into control components: input components are
/// the merged driver-reach sets, redundant components the alternating-
/// connected groups of redundant nodes.
struct ControlComponents {
    std::vector<std::vector<NodeId>> components;  // each ascending; ordered by min node id
    std::vector<NodeKind> side;                   // tag per component
    int largest_input = -1;                       // index into components, or -1
    int largest_redundant = -1;                   // index into components, or -1
};

/// All nodes reachable from driver node d by an alternating path that starts
/// with an unmatched in-edge of d and alternates unmatched/matched edges of
/// the bipartite split. Every returned node is an input node; d itself is
/// always included. Ascending order. Throws Error when d is not a driver
/// under m.
std::vector<NodeId> driver_reach(const DiGraph& g, const Matching& m, NodeId d);

/// Classify every node as input or redundant via one multi-source
/// alternating BFS from all drivers. Throws Error when m is not a maximum
/// matching of g.
Classification classify(const DiGraph& g, const Matching& m);

/// Control components for a classification produced by classify(g, m).
/// Input components merge overlapping driver-reach sets to a fixpoint;
/// redundant components connect redundant nodes whose - copies are joined by
/// alternating paths through the matched structure. Largest-per-side ties
/// break toward the smallest contained node id.
ControlComponents components(const DiGraph& g, const Matching& m,
                             const Classification& c);

inline ControlMode control_mode(const Classification& c) {
    return c.i_d > 0.5 ? ControlMode::distributed : ControlMode::centralized;
}

}  // namespace ctrlmode
