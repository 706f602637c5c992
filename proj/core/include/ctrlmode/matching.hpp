#pragma once

#include <cstdint>
#include <vector>

#include "ctrlmode/digraph.hpp"

namespace ctrlmode {

inline constexpr NodeId kUnmatched = -1;

/// Node-id scan order used by the matching search. The maximum matching of a
/// graph is usually not unique; fixing the scan order makes the result
/// deterministic. `descending` exists so callers can probe that downstream
/// results do not depend on the matching choice.
enum class ScanOrder : std::uint8_t { ascending, descending };

/// A matching on the bipartite split of a digraph: a set of edges in which
/// each node has at most one matched out-edge (its + copy) and at most one
/// matched in-edge (its - copy). The two maps are kept mutually consistent
/// by construction.
class Matching {
public:
    Matching() = default;
    explicit Matching(NodeId node_count)
        : target_of_(static_cast<std::size_t>(node_count), kUnmatched),
          source_of_(static_cast<std::size_t>(node_count), kUnmatched) {}

    NodeId node_count() const { return static_cast<NodeId>(target_of_.size()); }

    /// Number of matched edges; the matching number when maximum.
    int nu() const { return nu_; }

    /// v of the matched edge (u, v), or kUnmatched.
    NodeId matched_target(NodeId u) const { return target_of_[static_cast<std::size_t>(u)]; }
    /// u of the matched edge (u, v), or kUnmatched.
    NodeId matched_source(NodeId v) const { return source_of_[static_cast<std::size_t>(v)]; }

    bool out_matched(NodeId u) const { return matched_target(u) != kUnmatched; }
    bool in_matched(NodeId v) const { return matched_source(v) != kUnmatched; }
    bool contains(Edge e) const { return matched_target(e.from) == e.to; }

    /// Add a matched edge; both bipartite endpoints must be free.
    void add(Edge e);
    /// Remove a matched edge; it must be present.
    void erase(Edge e);

    /// Matched edges, sorted by (from, to).
    std::vector<Edge> edges() const;

private:
    std::vector<NodeId> target_of_, source_of_;
    int nu_ = 0;
};

/// Maximum matching of the bipartite split, found by the layered BFS/DFS
/// (Hopcroft-Karp) search in O(E sqrt(V)). Deterministic: free vertices and
/// adjacency are scanned in `order`, so repeated runs yield the identical
/// matching.
Matching maximum_matching(const DiGraph& g, ScanOrder order = ScanOrder::ascending);

/// True iff an alternating path joins an unmatched + copy to an unmatched
/// - copy; false certifies that m is maximum (Berge). This is a plain
/// alternating BFS, independent of the layered search above, usable as a
/// cross-check on maximum_matching and on post-removal matchings.
/// Throws Error if m is inconsistent with g (a matched edge absent).
bool has_augmenting_path(const DiGraph& g, const Matching& m);

/// Extend m along one shortest augmenting path if any exists (ascending
/// scan). Returns false when m is already maximum.
bool augment_once(const DiGraph& g, Matching& m);

}  // namespace ctrlmode
