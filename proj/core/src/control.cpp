#include "ctrlmode/control.hpp"

#include <algorithm>
#include <numeric>

#include "alt_reach.hpp"
#include "ctrlmode/errors.hpp"

namespace ctrlmode {

namespace {

// Plain union-find with path halving.
struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);  // keep the smaller id as root
        parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace

std::vector<NodeId> driver_reach(const DiGraph& g, const Matching& m, NodeId d) {
    if (m.node_count() != g.node_count()) {
        throw Error("matching node count does not match graph");
    }
    if (d < 0 || d >= g.node_count()) {
        throw Error("node id out of range");
    }
    if (m.in_matched(d)) {
        throw Error("node " + g.display_label(d) + " is not a driver (its - copy is matched)");
    }
    detail::ReachScratch scratch;
    scratch.attach(g.node_count());
    std::vector<NodeId> reached;
    const NodeId sources[1] = {d};
    detail::alternating_reach(g, m, sources, scratch, &reached);
    std::sort(reached.begin(), reached.end());
    return reached;
}

Classification classify(const DiGraph& g, const Matching& m) {
    if (has_augmenting_path(g, m)) {  // also validates consistency with g
        throw Error("matching is not maximum: an augmenting path exists");
    }
    const NodeId n = g.node_count();
    Classification c;
    c.kind.assign(static_cast<std::size_t>(n), NodeKind::redundant);
    for (NodeId v = 0; v < n; ++v) {
        if (!m.in_matched(v)) c.drivers.push_back(v);
        if (!m.out_matched(v)) c.unsaturated.push_back(v);
    }

    detail::ReachScratch scratch;
    scratch.attach(n);
    std::vector<NodeId> inputs;
    detail::alternating_reach(g, m, c.drivers, scratch, &inputs);
    for (NodeId v : inputs) {
        c.kind[static_cast<std::size_t>(v)] = NodeKind::input;
    }
    c.input_count = inputs.size();
    c.perfect_matching = n > 0 && c.drivers.empty();
    if (n > 0) {
        c.n_d = static_cast<double>(c.drivers.size()) / n;
        c.i_d = static_cast<double>(c.input_count) / n;
    }
    return c;
}

ControlComponents components(const DiGraph& g, const Matching& m,
                             const Classification& c) {
    const NodeId n = g.node_count();
    if (static_cast<NodeId>(c.kind.size()) != n || m.node_count() != n) {
        throw Error("classification does not belong to this graph");
    }

    // Input side: one BFS per driver, stopping at territory already owned by
    // an earlier driver and uniting the two reach sets on contact. The result
    // is the fixpoint of merging overlapping driver-reach sets.
    const auto num_drivers = static_cast<std::int32_t>(c.drivers.size());
    UnionFind driver_uf(static_cast<std::size_t>(num_drivers));
    std::vector<std::int32_t> comp_minus(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> comp_plus(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> queue;
    for (std::int32_t di = 0; di < num_drivers; ++di) {
        const NodeId d = c.drivers[static_cast<std::size_t>(di)];
        queue.clear();
        comp_minus[static_cast<std::size_t>(d)] = di;
        queue.push_back(d);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId v = queue[head];
            for (NodeId u : g.in_neighbors(v)) {
                if (m.matched_source(v) == u) continue;
                auto& owner_u = comp_plus[static_cast<std::size_t>(u)];
                if (owner_u != -1) {
                    driver_uf.unite(di, owner_u);
                    continue;
                }
                owner_u = di;
                const NodeId w = m.matched_target(u);
                if (w == kUnmatched) continue;
                auto& owner_w = comp_minus[static_cast<std::size_t>(w)];
                if (owner_w != -1) {
                    driver_uf.unite(di, owner_w);
                } else {
                    owner_w = di;
                    queue.push_back(w);
                }
            }
        }
    }

    // Redundant side: two redundant nodes are alternating-connected exactly
    // when an edge (a, b) joins b- to the + copy of a node a whose matched
    // target z is also redundant (path b- .. a+ .. z-).
    UnionFind node_uf(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        if (c.kind[static_cast<std::size_t>(e.to)] != NodeKind::redundant) continue;
        const NodeId z = m.matched_target(e.from);
        if (z == kUnmatched || c.kind[static_cast<std::size_t>(z)] != NodeKind::redundant) {
            continue;
        }
        node_uf.unite(e.to, z);
    }

    // Gather both sides, each component ascending, components ordered by
    // their smallest node id.
    std::vector<std::vector<NodeId>> input_groups(static_cast<std::size_t>(num_drivers));
    std::vector<std::vector<NodeId>> redundant_groups(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
        if (c.kind[static_cast<std::size_t>(v)] == NodeKind::input) {
            if (comp_minus[static_cast<std::size_t>(v)] == -1) {
                throw Error("classification was not produced from this matching");
            }
            const std::int32_t root = driver_uf.find(comp_minus[static_cast<std::size_t>(v)]);
            input_groups[static_cast<std::size_t>(root)].push_back(v);
        } else {
            const std::int32_t root = node_uf.find(v);
            redundant_groups[static_cast<std::size_t>(root)].push_back(v);
        }
    }

    ControlComponents out;
    for (auto& grp : input_groups) {
        if (grp.empty()) continue;
        out.components.push_back(std::move(grp));
        out.side.push_back(NodeKind::input);
    }
    for (auto& grp : redundant_groups) {
        if (grp.empty()) continue;
        out.components.push_back(std::move(grp));
        out.side.push_back(NodeKind::redundant);
    }
    // Node ids ascend within each group already; order groups by min id.
    std::vector<std::size_t> order(out.components.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.components[a].front() < out.components[b].front();
    });
    ControlComponents sorted;
    sorted.components.reserve(out.components.size());
    sorted.side.reserve(out.side.size());
    for (std::size_t idx : order) {
        sorted.components.push_back(std::move(out.components[idx]));
        sorted.side.push_back(out.side[idx]);
    }
    for (std::size_t i = 0; i < sorted.components.size(); ++i) {
        const auto sz = sorted.components[i].size();
        if (sorted.side[i] == NodeKind::input) {
            if (sorted.largest_input < 0 ||
                sz > sorted.components[static_cast<std::size_t>(sorted.largest_input)].size()) {
                sorted.largest_input = static_cast<int>(i);
            }
        } else {
            if (sorted.largest_redundant < 0 ||
                sz > sorted.components[static_cast<std::size_t>(sorted.largest_redundant)].size()) {
                sorted.largest_redundant = static_cast<int>(i);
            }
        }
    }
    return sorted;
}

}  // namespace ctrlmode
