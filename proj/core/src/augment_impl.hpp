#pragma once

// Internal single-augmentation primitive shared by the matching and alter
// modules. Not installed.

#include <cstdint>
#include <vector>

#include "ctrlmode/matching.hpp"

namespace ctrlmode::detail {

/// Stamped visited marks: bumping the epoch invalidates everything without
/// touching memory, so repeated augmentations stay cheap.
struct AugmentScratch {
    std::vector<std::uint32_t> seen_plus, seen_minus;
    std::vector<NodeId> minus_parent, queue;
    std::uint32_t epoch = 0;

    void attach(NodeId n) {
        const auto size = static_cast<std::size_t>(n);
        if (seen_plus.size() != size) {
            seen_plus.assign(size, 0);
            seen_minus.assign(size, 0);
            minus_parent.assign(size, kUnmatched);
            queue.reserve(size);
        }
        ++epoch;
        queue.clear();
    }
};

/// Shared BFS core; the queue must be seeded with free + copies.
/// `flipped_targets`, when non-null, receives the - nodes whose matched
/// source changed, path end first.
template <class G>
bool augment_bfs(const G& g, Matching& m, AugmentScratch& s,
                 std::vector<NodeId>* flipped_targets) {
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        const NodeId u = s.queue[head];
        for (NodeId v : g.out_neighbors(u)) {
            if (m.matched_target(u) == v) continue;  // stay alternating
            if (s.seen_minus[static_cast<std::size_t>(v)] == s.epoch) continue;
            s.seen_minus[static_cast<std::size_t>(v)] = s.epoch;
            s.minus_parent[static_cast<std::size_t>(v)] = u;
            if (!m.in_matched(v)) {
                NodeId cur = v;  // flip the path back to its free + source
                for (;;) {
                    if (flipped_targets) flipped_targets->push_back(cur);
                    const NodeId src = s.minus_parent[static_cast<std::size_t>(cur)];
                    const NodeId prev = m.matched_target(src);
                    if (prev != kUnmatched) m.erase({src, prev});
                    m.add({src, cur});
                    if (prev == kUnmatched) break;
                    cur = prev;
                }
                return true;
            }
            const NodeId w = m.matched_source(v);
            if (s.seen_plus[static_cast<std::size_t>(w)] != s.epoch) {
                s.seen_plus[static_cast<std::size_t>(w)] = s.epoch;
                s.queue.push_back(w);
            }
        }
    }
    return false;
}

/// Extend m along one shortest augmenting path, BFS from every free + copy
/// in ascending id order. Returns false when m is already maximum.
template <class G>
bool augment_once_impl(const G& g, Matching& m, AugmentScratch& s) {
    const NodeId n = g.node_count();
    s.attach(n);
    for (NodeId u = 0; u < n; ++u) {
        if (!m.out_matched(u)) {
            s.seen_plus[static_cast<std::size_t>(u)] = s.epoch;
            s.queue.push_back(u);
        }
    }
    return augment_bfs(g, m, s, nullptr);
}

/// Augment from one known free + copy only. Used after breaking a matched
/// edge of an alternating cycle, where the freed + copy is the only vertex
/// that can source an augmenting path.
template <class G>
bool augment_from(const G& g, Matching& m, NodeId free_plus, AugmentScratch& s,
                  std::vector<NodeId>* flipped_targets) {
    s.attach(g.node_count());
    s.seen_plus[static_cast<std::size_t>(free_plus)] = s.epoch;
    s.queue.push_back(free_plus);
    return augment_bfs(g, m, s, flipped_targets);
}

}  // namespace ctrlmode::detail
