#include "ctrlmode/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "augment_impl.hpp"
#include "ctrlmode/errors.hpp"

namespace ctrlmode {

void Matching::add(Edge e) {
    auto& t = target_of_[static_cast<std::size_t>(e.from)];
    auto& s = source_of_[static_cast<std::size_t>(e.to)];
    if (t != kUnmatched || s != kUnmatched) {
        throw Error("matched edges may not share bipartite endpoints");
    }
    t = e.to;
    s = e.from;
    ++nu_;
}

void Matching::erase(Edge e) {
    if (matched_target(e.from) != e.to) {
        throw Error("edge is not in the matching");
    }
    target_of_[static_cast<std::size_t>(e.from)] = kUnmatched;
    source_of_[static_cast<std::size_t>(e.to)] = kUnmatched;
    --nu_;
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(nu_));
    for (NodeId u = 0; u < node_count(); ++u) {
        if (out_matched(u)) {
            out.push_back({u, matched_target(u)});
        }
    }
    return out;  // ascending u, hence sorted by (from, to)
}

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();

void check_consistent(const DiGraph& g, const Matching& m) {
    if (m.node_count() != g.node_count()) {
        throw Error("matching node count does not match graph");
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const NodeId v = m.matched_target(u);
        if (v == kUnmatched) continue;
        if (!g.has_edge(u, v)) {
            throw Error("matched edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") is absent from the graph");
        }
        if (m.matched_source(v) != u) {
            throw Error("matching maps are mutually inconsistent");
        }
    }
}

}  // namespace

Matching maximum_matching(const DiGraph& g, ScanOrder order) {
    const NodeId n = g.node_count();
    Matching result(n);
    if (n == 0 || g.edge_count() == 0) {
        return result;
    }

    std::vector<NodeId> scan(static_cast<std::size_t>(n));
    std::iota(scan.begin(), scan.end(), NodeId{0});
    if (order == ScanOrder::descending) {
        std::reverse(scan.begin(), scan.end());
    }
    auto neighbors_in_order = [&](NodeId u, auto&& fn) {
        const auto nbrs = g.out_neighbors(u);
        if (order == ScanOrder::ascending) {
            for (NodeId v : nbrs) {
                if (fn(v)) return true;
            }
        } else {
            for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
                if (fn(*it)) return true;
            }
        }
        return false;
    };

    std::vector<NodeId> pair_out(static_cast<std::size_t>(n), kUnmatched);
    std::vector<NodeId> pair_in(static_cast<std::size_t>(n), kUnmatched);
    std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
    std::vector<NodeId> queue;
    queue.reserve(static_cast<std::size_t>(n));

    // Layer + copies by shortest alternating distance from a free + copy.
    auto bfs = [&]() -> std::int32_t {
        queue.clear();
        for (NodeId u : scan) {
            if (pair_out[static_cast<std::size_t>(u)] == kUnmatched) {
                dist[static_cast<std::size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        std::int32_t shortest = kInf;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            const std::int32_t du = dist[static_cast<std::size_t>(u)];
            if (du + 1 >= shortest) continue;
            neighbors_in_order(u, [&](NodeId v) {
                const NodeId w = pair_in[static_cast<std::size_t>(v)];
                if (w == kUnmatched) {
                    shortest = std::min(shortest, du + 1);
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    queue.push_back(w);
                }
                return false;
            });
        }
        return shortest;
    };

    // Iterative DFS along the layered graph; flips pairs on success.
    struct Frame {
        NodeId u;
        std::size_t next;  // index into the adjacency of u (in scan order)
    };
    std::vector<Frame> stack;
    std::vector<NodeId> chosen;  // chosen v per frame
    auto neighbor_at = [&](NodeId u, std::size_t idx) -> NodeId {
        const auto nbrs = g.out_neighbors(u);
        return order == ScanOrder::ascending ? nbrs[idx] : nbrs[nbrs.size() - 1 - idx];
    };

    auto dfs_augment = [&](NodeId root, std::int32_t shortest) -> bool {
        stack.clear();
        chosen.clear();
        stack.push_back({root, 0});
        chosen.push_back(kUnmatched);
        while (!stack.empty()) {
            const NodeId u = stack.back().u;
            const std::size_t degree = g.out_neighbors(u).size();
            bool descended = false;
            while (stack.back().next < degree) {
                const NodeId v = neighbor_at(u, stack.back().next++);
                const NodeId w = pair_in[static_cast<std::size_t>(v)];
                if (w == kUnmatched) {
                    if (dist[static_cast<std::size_t>(u)] + 1 != shortest) continue;
                    // Free - copy found: flip along the whole stack.
                    chosen.back() = v;
                    for (std::size_t i = stack.size(); i-- > 0;) {
                        pair_in[static_cast<std::size_t>(chosen[i])] = stack[i].u;
                        pair_out[static_cast<std::size_t>(stack[i].u)] = chosen[i];
                    }
                    return true;
                }
                if (dist[static_cast<std::size_t>(w)] ==
                    dist[static_cast<std::size_t>(u)] + 1) {
                    chosen.back() = v;
                    stack.push_back({w, 0});
                    chosen.push_back(kUnmatched);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                dist[static_cast<std::size_t>(u)] = kInf;  // dead end
                stack.pop_back();
                chosen.pop_back();
            }
        }
        return false;
    };

    for (;;) {
        const std::int32_t shortest = bfs();
        if (shortest == kInf) break;
        for (NodeId u : scan) {
            if (pair_out[static_cast<std::size_t>(u)] == kUnmatched) {
                dfs_augment(u, shortest);
            }
        }
    }

    for (NodeId u = 0; u < n; ++u) {
        if (pair_out[static_cast<std::size_t>(u)] != kUnmatched) {
            result.add({u, pair_out[static_cast<std::size_t>(u)]});
        }
    }
    return result;
}

bool has_augmenting_path(const DiGraph& g, const Matching& m) {
    check_consistent(g, m);
    const NodeId n = g.node_count();
    std::vector<char> seen_plus(static_cast<std::size_t>(n), 0);
    std::vector<char> seen_minus(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> queue;  // holds + copies; - copies expand immediately
    for (NodeId u = 0; u < n; ++u) {
        if (!m.out_matched(u)) {
            seen_plus[static_cast<std::size_t>(u)] = 1;
            queue.push_back(u);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (NodeId v : g.out_neighbors(u)) {
            if (m.matched_target(u) == v) continue;  // stay alternating
            if (!m.in_matched(v)) {
                return true;  // free - copy reached from a free + copy
            }
            if (!seen_minus[static_cast<std::size_t>(v)]) {
                seen_minus[static_cast<std::size_t>(v)] = 1;
                const NodeId w = m.matched_source(v);
                if (!seen_plus[static_cast<std::size_t>(w)]) {
                    seen_plus[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return false;
}

bool augment_once(const DiGraph& g, Matching& m) {
    check_consistent(g, m);
    detail::AugmentScratch scratch;
    return detail::augment_once_impl(g, m, scratch);
}

}  // namespace ctrlmode
