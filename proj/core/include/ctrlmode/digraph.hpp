#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctrlmode {

using NodeId = std::int32_t;

/// Directed edge between dense node ids.
struct Edge {
    NodeId from{};
    NodeId to{};

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple directed graph with dense node ids in [0, n).
///
/// The edge set is a set: duplicate edges collapse. Self-loops are kept and
/// participate in matching like any other edge. Values are immutable after
/// construction; remove_edges returns a new graph, so a DiGraph can be shared
/// freely across threads.
///
/// The bipartite split used by all matching machinery is implicit: a directed
/// edge u->v is the bipartite edge (u+, v-). The in-edges of node m are
/// exactly the bipartite edges at m-, its out-edges exactly those at m+.
class DiGraph {
public:
    DiGraph() = default;

    /// Build from a node count and an edge list. Edges are deduplicated and
    /// stored sorted by (from, to). `labels`, when non-empty, maps every
    /// dense id to its external name (size must equal node_count).
    DiGraph(NodeId node_count, std::vector<Edge> edges,
            std::vector<std::string> labels = {});

    /// Parse whitespace-separated edge-list text.
    ///
    /// Each line is "u v" (an edge), "u" (declares an isolated node), or a
    /// '#' comment. Tokens are arbitrary strings and are mapped to dense ids
    /// in first-appearance order. Duplicate edge lines collapse. Lines with
    /// three or more tokens raise ParseError with the offending line number.
    static DiGraph parse_edge_list(std::string_view text);

    /// Serialize to edge-list text: one "u\tv" line per edge, sorted by
    /// (from, to), followed by one single-token line per isolated node.
    /// Uses original labels when present, dense ids otherwise. Parsing the
    /// output reproduces this graph up to label mapping.
    std::string write_edge_list() const;

    /// Return a copy of this graph without `removals`. Node set (and labels)
    /// unchanged. Throws Error if any removal is not a current edge, which
    /// signals a stale plan.
    DiGraph remove_edges(std::span<const Edge> removals) const;

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// All edges, sorted by (from, to).
    std::span<const Edge> edges() const { return edges_; }

    bool has_edge(NodeId from, NodeId to) const;

    /// Targets of u's out-edges, ascending.
    std::span<const NodeId> out_neighbors(NodeId u) const;
    /// Sources of v's in-edges, ascending.
    std::span<const NodeId> in_neighbors(NodeId v) const;

    bool has_labels() const { return !labels_.empty(); }
    /// External label of v, or the decimal id when the graph is unlabeled.
    std::string display_label(NodeId v) const;

    /// Average total degree <k> = 2L/n (0 for the empty graph).
    double average_degree() const;

private:
    void build_adjacency();

    NodeId n_ = 0;
    std::vector<Edge> edges_;           // sorted by (from, to), unique
    std::vector<std::string> labels_;   // empty, or size n_
    std::vector<std::uint32_t> out_offsets_, in_offsets_;
    std::vector<NodeId> out_targets_, in_sources_;
};

}  // namespace ctrlmode
