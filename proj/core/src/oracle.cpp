#include "ctrlmode/oracle.hpp"

#include "ctrlmode/errors.hpp"

namespace ctrlmode {

OracleResult enumerate_matchings(const DiGraph& g) {
    const NodeId n = g.node_count();
    if (n > kOracleNodeLimit) {
        throw Error("oracle: refusing graphs with more than " +
                    std::to_string(kOracleNodeLimit) + " nodes");
    }
    const auto edges = g.edges();
    const auto edge_count = static_cast<int>(edges.size());

    OracleResult res;
    res.ever_unmatched.assign(static_cast<std::size_t>(n), false);

    std::uint32_t used_out = 0, used_in = 0;
    auto free_pair = [&](const Edge& e) {
        return !(used_out & (1u << e.from)) && !(used_in & (1u << e.to));
    };
    auto take = [&](const Edge& e) {
        used_out |= 1u << e.from;
        used_in |= 1u << e.to;
    };
    auto untake = [&](const Edge& e) {
        used_out &= ~(1u << e.from);
        used_in &= ~(1u << e.to);
    };

    // Greedy seed keeps the bound tight from the start.
    int best = 0;
    for (const Edge& e : edges) {
        if (free_pair(e)) {
            take(e);
            ++best;
        }
    }
    used_out = used_in = 0;

    // Pass 1: matching number by branch and bound over the edge list.
    auto max_rec = [&](auto&& self, int idx, int count) -> void {
        if (count > best) best = count;
        if (idx == edge_count || count + (edge_count - idx) <= best) return;
        const Edge& e = edges[static_cast<std::size_t>(idx)];
        if (free_pair(e)) {
            take(e);
            self(self, idx + 1, count + 1);
            untake(e);
        }
        self(self, idx + 1, count);
    };
    max_rec(max_rec, 0, 0);
    res.nu = best;

    // Pass 2: visit every matching of exactly nu edges once (cutting as soon
    // as the size is reached: a maximum matching has no extension) and record
    // which - copies are free in at least one of them.
    auto enum_rec = [&](auto&& self, int idx, int count) -> void {
        if (count == res.nu) {
            ++res.count;
            for (NodeId v = 0; v < n; ++v) {
                if (!(used_in & (1u << v))) {
                    res.ever_unmatched[static_cast<std::size_t>(v)] = true;
                }
            }
            return;
        }
        if (idx == edge_count || count + (edge_count - idx) < res.nu) return;
        const Edge& e = edges[static_cast<std::size_t>(idx)];
        if (free_pair(e)) {
            take(e);
            self(self, idx + 1, count + 1);
            untake(e);
        }
        self(self, idx + 1, count);
    };
    enum_rec(enum_rec, 0, 0);
    return res;
}

}  // namespace ctrlmode
