#pragma once

// Internal alternating-BFS helper shared by the control and alter modules.
// Not installed.

#include <cstdint>
#include <span>
#include <vector>

#include "ctrlmode/digraph.hpp"
#include "ctrlmode/matching.hpp"

namespace ctrlmode::detail {

/// Reusable visited marks for repeated alternating BFS runs on one graph.
/// Stamping avoids clearing the arrays between searches.
struct ReachScratch {
    std::vector<std::uint32_t> minus_mark, plus_mark;
    std::uint32_t stamp = 0;
    std::vector<NodeId> queue;

    void attach(NodeId n) {
        minus_mark.assign(static_cast<std::size_t>(n), 0);
        plus_mark.assign(static_cast<std::size_t>(n), 0);
        stamp = 0;
        queue.reserve(static_cast<std::size_t>(n));
    }

    bool minus_seen(NodeId v) const { return minus_mark[static_cast<std::size_t>(v)] == stamp; }
    bool plus_seen(NodeId u) const { return plus_mark[static_cast<std::size_t>(u)] == stamp; }
};

/// Alternating BFS from the - copies of `minus_sources`: from v- traverse
/// every unmatched in-edge of v backwards to the + copy of its source, from
/// u+ traverse its matched out-edge forward. Marks reached copies in
/// `scratch` (valid until the next call) and returns the number of nodes
/// whose - copy was reached, sources included. When `collect` is non-null
/// the reached nodes are appended in BFS order.
///
/// Works on any graph type exposing node_count() and in_neighbors(v).
template <class G>
std::size_t alternating_reach(const G& g, const Matching& m,
                              std::span<const NodeId> minus_sources,
                              ReachScratch& scratch,
                              std::vector<NodeId>* collect = nullptr) {
    ++scratch.stamp;
    scratch.queue.clear();
    std::size_t reached = 0;
    for (NodeId v : minus_sources) {
        if (scratch.minus_seen(v)) continue;
        scratch.minus_mark[static_cast<std::size_t>(v)] = scratch.stamp;
        scratch.queue.push_back(v);
        if (collect) collect->push_back(v);
        ++reached;
    }
    for (std::size_t head = 0; head < scratch.queue.size(); ++head) {
        const NodeId v = scratch.queue[head];
        for (NodeId u : g.in_neighbors(v)) {
            if (m.matched_source(v) == u) continue;  // only unmatched edges leave v-
            if (scratch.plus_seen(u)) continue;
            scratch.plus_mark[static_cast<std::size_t>(u)] = scratch.stamp;
            const NodeId w = m.matched_target(u);
            if (w == kUnmatched || scratch.minus_seen(w)) continue;
            scratch.minus_mark[static_cast<std::size_t>(w)] = scratch.stamp;
            scratch.queue.push_back(w);
            if (collect) collect->push_back(w);
            ++reached;
        }
    }
    return reached;
}

}  // namespace ctrlmode::detail
