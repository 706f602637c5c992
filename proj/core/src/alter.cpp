#include "ctrlmode/alter.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>

#include "alt_reach.hpp"
#include "augment_impl.hpp"
#include "ctrlmode/errors.hpp"

namespace ctrlmode {

namespace {

Summary summarize(const DiGraph& g, const Matching& m, const Classification& c) {
    Summary s;
    s.nodes = static_cast<std::size_t>(g.node_count());
    s.edges = g.edge_count();
    s.nu = m.nu();
    s.input_count = c.input_count;
    s.n_d = c.n_d;
    s.i_d = c.i_d;
    s.perfect_matching = c.perfect_matching;
    return s;
}

// Mutable adjacency view used by the conversion loops: erasing one edge is
// O(degree) instead of a full graph rebuild. Lists stay sorted, so traversal
// order matches the immutable graph's.
struct WorkGraph {
    std::vector<std::vector<NodeId>> out, in;

    explicit WorkGraph(const DiGraph& g)
        : out(static_cast<std::size_t>(g.node_count())),
          in(static_cast<std::size_t>(g.node_count())) {
        for (const Edge& e : g.edges()) {
            out[static_cast<std::size_t>(e.from)].push_back(e.to);
            in[static_cast<std::size_t>(e.to)].push_back(e.from);
        }
    }

    NodeId node_count() const { return static_cast<NodeId>(out.size()); }
    std::span<const NodeId> out_neighbors(NodeId u) const {
        return out[static_cast<std::size_t>(u)];
    }
    std::span<const NodeId> in_neighbors(NodeId v) const {
        return in[static_cast<std::size_t>(v)];
    }

    void erase(Edge e) {
        auto& o = out[static_cast<std::size_t>(e.from)];
        const auto oit = std::find(o.begin(), o.end(), e.to);
        if (oit == o.end()) throw Error("working graph lost an edge");
        o.erase(oit);
        auto& i = in[static_cast<std::size_t>(e.to)];
        i.erase(std::find(i.begin(), i.end(), e.from));
    }
};

// Contraction of the matched structure spanned by `scope`: one supernode per
// matched edge whose target node lies in scope, an arc A -> B for each
// unmatched edge (source(A), target(B)). A directed cycle here is exactly an
// alternating cycle whose swap matching survives breaking one matched edge.
//
// Scoped targets stay matched across rematches, so the supernode set is
// fixed after the first build; only the arcs of supernodes whose matched
// source changed need refreshing. All storage is reusable across iterations.
struct ContractionWs {
    std::vector<std::int32_t> snode_of;          // node -> supernode or -1
    std::vector<NodeId> targets;                 // supernode -> matched-edge target node
    std::vector<std::vector<std::int32_t>> arcs; // per supernode, target index ascending
    // Tarjan state; `seen` is epoch-stamped so runs do not clear arrays.
    std::vector<std::int32_t> index, low, comp, comp_size, tstack;
    std::vector<std::uint32_t> seen;
    std::vector<char> on_stack;
    std::uint32_t epoch = 0;
    struct Frame {
        std::int32_t v;
        std::size_t next;
    };
    std::vector<Frame> call;
};

// Rebuild the out-arcs of one supernode from its current matched source.
template <class G>
void refresh_arcs(const G& g, const Matching& m, ContractionWs& ws, NodeId target) {
    const std::int32_t a = ws.snode_of[static_cast<std::size_t>(target)];
    if (a < 0) return;
    auto& list = ws.arcs[static_cast<std::size_t>(a)];
    list.clear();
    const NodeId src = m.matched_source(target);
    for (NodeId b : g.out_neighbors(src)) {
        if (b == target) continue;  // the matched edge itself
        const std::int32_t to = ws.snode_of[static_cast<std::size_t>(b)];
        if (to >= 0) list.push_back(to);
    }
}

template <class G>
void build_contraction(const G& g, const Matching& m, std::span<const NodeId> scope,
                       ContractionWs& ws) {
    const auto n = static_cast<std::size_t>(g.node_count());
    ws.snode_of.assign(n, -1);
    ws.targets.clear();
    for (NodeId x : scope) {
        if (m.in_matched(x) && ws.snode_of[static_cast<std::size_t>(x)] < 0) {
            ws.snode_of[static_cast<std::size_t>(x)] =
                static_cast<std::int32_t>(ws.targets.size());
            ws.targets.push_back(x);
        }
    }
    const std::size_t count = ws.targets.size();
    if (ws.arcs.size() < count) ws.arcs.resize(count);
    for (NodeId x : ws.targets) refresh_arcs(g, m, ws, x);
    ws.index.assign(count, 0);
    ws.low.assign(count, 0);
    ws.comp.assign(count, -1);
    ws.seen.assign(count, 0);
    ws.on_stack.assign(count, 0);
    ws.epoch = 0;
}

// Iterative Tarjan over the contraction; fills ws.comp / ws.comp_size.
void strongly_connected(ContractionWs& ws) {
    const auto n = static_cast<std::int32_t>(ws.targets.size());
    ++ws.epoch;
    ws.comp_size.clear();
    ws.tstack.clear();
    ws.call.clear();
    std::int32_t next_index = 0;

    for (std::int32_t root = 0; root < n; ++root) {
        if (ws.seen[static_cast<std::size_t>(root)] == ws.epoch) continue;
        ws.call.push_back({root, 0});
        ws.seen[static_cast<std::size_t>(root)] = ws.epoch;
        ws.index[static_cast<std::size_t>(root)] = ws.low[static_cast<std::size_t>(root)] =
            next_index++;
        ws.tstack.push_back(root);
        ws.on_stack[static_cast<std::size_t>(root)] = 1;
        while (!ws.call.empty()) {
            const std::int32_t v = ws.call.back().v;
            if (ws.call.back().next < ws.arcs[static_cast<std::size_t>(v)].size()) {
                const std::int32_t w =
                    ws.arcs[static_cast<std::size_t>(v)][ws.call.back().next++];
                if (ws.seen[static_cast<std::size_t>(w)] != ws.epoch) {
                    ws.seen[static_cast<std::size_t>(w)] = ws.epoch;
                    ws.index[static_cast<std::size_t>(w)] =
                        ws.low[static_cast<std::size_t>(w)] = next_index++;
                    ws.tstack.push_back(w);
                    ws.on_stack[static_cast<std::size_t>(w)] = 1;
                    ws.call.push_back({w, 0});
                } else if (ws.on_stack[static_cast<std::size_t>(w)]) {
                    ws.low[static_cast<std::size_t>(v)] =
                        std::min(ws.low[static_cast<std::size_t>(v)],
                                 ws.index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (ws.low[static_cast<std::size_t>(v)] ==
                    ws.index[static_cast<std::size_t>(v)]) {
                    const auto comp_id = static_cast<std::int32_t>(ws.comp_size.size());
                    std::int32_t members = 0;
                    for (;;) {
                        const std::int32_t w = ws.tstack.back();
                        ws.tstack.pop_back();
                        ws.on_stack[static_cast<std::size_t>(w)] = 0;
                        ws.comp[static_cast<std::size_t>(w)] = comp_id;
                        ++members;
                        if (w == v) break;
                    }
                    ws.comp_size.push_back(members);
                }
                ws.call.pop_back();
                if (!ws.call.empty()) {
                    const std::int32_t parent = ws.call.back().v;
                    ws.low[static_cast<std::size_t>(parent)] =
                        std::min(ws.low[static_cast<std::size_t>(parent)],
                                 ws.low[static_cast<std::size_t>(v)]);
                }
            }
        }
    }
}

void append_fixed(std::string& out, double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    out += buf;
}

constexpr int stage_rank(RemovalStage s) {
    switch (s) {
        case RemovalStage::detach_driver_inedges:
        case RemovalStage::detach_unsaturated_outedges:
            return 0;
        case RemovalStage::break_cycle:
            return 1;
        case RemovalStage::create_driver:
            return 2;
    }
    return 3;
}

}  // namespace

RemovalPlan to_centralized(const DiGraph& g) {
    RemovalPlan plan;
    plan.target_mode = TargetMode::centralized;
    const Matching m = maximum_matching(g);
    const Classification c = classify(g, m);
    plan.base_matching = m.edges();
    plan.predicted = {c.n_d, c.i_d, 0.0};
    if (c.drivers.empty()) {
        plan.no_op_reason = NoOpReason::no_drivers;
        return plan;
    }
    const ControlComponents comps = components(g, m, c);
    const auto& pmax = comps.components[static_cast<std::size_t>(comps.largest_input)];
    std::vector<NodeId> dp;  // drivers inside the chosen component
    std::set_intersection(pmax.begin(), pmax.end(), c.drivers.begin(), c.drivers.end(),
                          std::back_inserter(dp));
    for (NodeId d : dp) {
        for (NodeId u : g.in_neighbors(d)) {
            plan.removals.push_back({{u, d}, RemovalStage::detach_driver_inedges});
        }
    }
    if (plan.removals.empty()) {
        plan.no_op_reason = NoOpReason::driver_has_no_in_edges;
        return plan;
    }
    // Detaching every driver of the component cuts all alternating paths into
    // it while leaving the matching untouched, so exactly the non-driver
    // members flip to redundant and nothing else moves.
    std::set_difference(pmax.begin(), pmax.end(), dp.begin(), dp.end(),
                        std::back_inserter(plan.expected_redundant));
    const double flips = static_cast<double>(plan.expected_redundant.size());
    const double n = static_cast<double>(g.node_count());
    plan.predicted.n_d = c.n_d;
    plan.predicted.i_d = c.i_d - flips / n;
    plan.predicted.delta_nd = flips / n;
    return plan;
}

RemovalPlan to_distributed(const DiGraph& g) {
    RemovalPlan plan;
    plan.target_mode = TargetMode::distributed;
    Matching m = maximum_matching(g);
    const Classification before = classify(g, m);
    plan.base_matching = m.edges();
    plan.predicted = {before.n_d, before.i_d, 0.0};
    const ControlComponents comps = components(g, m, before);
    if (comps.largest_redundant < 0) {
        plan.no_op_reason = NoOpReason::no_redundant_component;
        return plan;
    }
    const std::vector<NodeId>& cstar =
        comps.components[static_cast<std::size_t>(comps.largest_redundant)];
    const NodeId n = g.node_count();

    detail::ReachScratch scratch;
    scratch.attach(n);

    // Stage 1: any unsaturated node whose alternating reach touches the
    // component could re-augment once a matched edge is removed, undoing the
    // conversion. The touching nodes are exactly the free + copies reached by
    // one alternating BFS out of the component's - copies, and all their
    // out-edges are unmatched.
    detail::alternating_reach(g, m, cstar, scratch, nullptr);
    std::vector<Edge> stage1;
    for (NodeId u : before.unsaturated) {
        if (!scratch.plus_seen(u)) continue;
        for (NodeId t : g.out_neighbors(u)) {
            stage1.push_back({u, t});
        }
    }
    for (const Edge& e : stage1) {
        plan.removals.push_back({e, RemovalStage::detach_unsaturated_outedges});
    }
    WorkGraph work(g);
    for (const Edge& e : stage1) work.erase(e);

    // Stage 2: break alternating cycles in the component's matched structure
    // one matched edge at a time. Each break keeps the matching number (the
    // cycle's swap matching survives); rematch before searching again.
    ContractionWs ws;
    detail::AugmentScratch aug;
    std::vector<NodeId> flipped;
    build_contraction(work, m, cstar, ws);
    for (;;) {
        strongly_connected(ws);
        bool found = false;
        Edge best{};
        for (std::size_t i = 0; i < ws.targets.size(); ++i) {
            if (ws.comp_size[static_cast<std::size_t>(ws.comp[i])] < 2) continue;
            const Edge e{m.matched_source(ws.targets[i]), ws.targets[i]};
            if (!found || e < best) {
                found = true;
                best = e;
            }
        }
        if (!found) break;
        plan.removals.push_back({best, RemovalStage::break_cycle});
        work.erase(best);
        m.erase(best);
        // The freed + copy is the only possible source of an augmenting path:
        // stage 1 detached every other free + copy that could reach the
        // component, and the cycle's swap matching guarantees one exists. The
        // path must end at the freed - copy, which keeps every scoped target
        // matched and the supernode set stable.
        flipped.clear();
        if (!detail::augment_from(work, m, best.from, aug, &flipped)) {
            throw VerificationError("cycle break changed the matching number",
                                    {best.from, best.to});
        }
        if (!m.in_matched(best.to)) {
            throw VerificationError("rematch left a component node unmatched",
                                    {best.to});
        }
        for (NodeId y : flipped) refresh_arcs(work, m, ws, y);
    }

    // Stage 3: free the - copy whose alternating reach is largest. The reach
    // of x- under the current matching equals its driver reach after the
    // matched edge is removed, so candidates are scored without mutating.
    bool have = false;
    std::size_t best_size = 0;
    Edge best_edge{};
    for (NodeId x : cstar) {
        if (!m.in_matched(x)) continue;
        const NodeId sources[1] = {x};
        const std::size_t size = detail::alternating_reach(work, m, sources, scratch, nullptr);
        const Edge e{m.matched_source(x), x};
        if (!have || size > best_size || (size == best_size && e < best_edge)) {
            have = true;
            best_size = size;
            best_edge = e;
        }
    }
    if (!have) {
        throw Error("redundant component has no matched edge");
    }
    plan.removals.push_back({best_edge, RemovalStage::create_driver});
    work.erase(best_edge);
    m.erase(best_edge);

    plan.expected_new_inputs.clear();
    const NodeId sources[1] = {best_edge.to};
    detail::alternating_reach(work, m, sources, scratch, &plan.expected_new_inputs);
    std::sort(plan.expected_new_inputs.begin(), plan.expected_new_inputs.end());

    // Materialize the mutated graph once for the forecast; m is maximum on it
    // (nu dropped by exactly one) and classify re-checks that via its
    // augmenting-path guard.
    std::vector<Edge> removed;
    removed.reserve(plan.removals.size());
    for (const PlannedRemoval& pr : plan.removals) removed.push_back(pr.edge);
    const DiGraph mutated = g.remove_edges(removed);
    const Classification after = classify(mutated, m);
    plan.predicted.n_d = after.n_d;
    plan.predicted.i_d = after.i_d;
    std::size_t flips = 0;
    for (NodeId v = 0; v < n; ++v) {
        flips += before.kind[static_cast<std::size_t>(v)] != after.kind[static_cast<std::size_t>(v)];
    }
    plan.predicted.delta_nd = n > 0 ? static_cast<double>(flips) / n : 0.0;
    return plan;
}

std::vector<std::vector<Edge>> find_alternating_cycles(const DiGraph& g,
                                                       const Matching& m,
                                                       std::span<const NodeId> scope) {
    std::vector<NodeId> sorted_scope(scope.begin(), scope.end());
    std::sort(sorted_scope.begin(), sorted_scope.end());
    ContractionWs ws;
    build_contraction(g, m, sorted_scope, ws);
    strongly_connected(ws);

    std::vector<std::vector<Edge>> cycles;
    std::vector<char> comp_done(ws.comp_size.size(), 0);
    std::vector<std::int32_t> parent(ws.targets.size());
    std::vector<std::int32_t> queue;
    for (std::size_t start = 0; start < ws.targets.size(); ++start) {
        const std::int32_t comp_id = ws.comp[start];
        if (ws.comp_size[static_cast<std::size_t>(comp_id)] < 2) continue;
        if (comp_done[static_cast<std::size_t>(comp_id)]) continue;
        comp_done[static_cast<std::size_t>(comp_id)] = 1;

        // Shortest cycle through the component's first supernode, found by a
        // BFS restricted to the component.
        std::fill(parent.begin(), parent.end(), std::int32_t{-2});
        queue.clear();
        const auto s0 = static_cast<std::int32_t>(start);
        parent[start] = -1;
        queue.push_back(s0);
        std::int32_t closer = -1;  // supernode whose arc closes the cycle
        for (std::size_t head = 0; head < queue.size() && closer < 0; ++head) {
            const std::int32_t v = queue[head];
            for (const std::int32_t w : ws.arcs[static_cast<std::size_t>(v)]) {
                if (ws.comp[static_cast<std::size_t>(w)] != comp_id) continue;
                if (w == s0) {
                    closer = v;
                    break;
                }
                if (parent[static_cast<std::size_t>(w)] != -2) continue;
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
        if (closer < 0) continue;  // cannot happen in a nontrivial SCC

        std::vector<std::int32_t> snodes;  // cycle supernodes, start first
        for (std::int32_t v = closer; v != -1; v = parent[static_cast<std::size_t>(v)]) {
            snodes.push_back(v);
        }
        std::reverse(snodes.begin(), snodes.end());

        std::vector<Edge> cycle;
        cycle.reserve(snodes.size() * 2);
        for (std::size_t i = 0; i < snodes.size(); ++i) {
            const NodeId ta = ws.targets[static_cast<std::size_t>(snodes[i])];
            const NodeId tb =
                ws.targets[static_cast<std::size_t>(snodes[(i + 1) % snodes.size()])];
            cycle.push_back({m.matched_source(ta), ta});  // matched edge of A
            cycle.push_back({m.matched_source(ta), tb});  // unmatched arc A -> B
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

AlterReport compare_states(const DiGraph& before, const DiGraph& after,
                           std::size_t removed_count) {
    if (before.node_count() != after.node_count()) {
        throw Error("compare_states: node sets differ");
    }
    const Matching m_before = maximum_matching(before);
    const Classification c_before = classify(before, m_before);
    const Matching m_after = maximum_matching(after);
    const Classification c_after = classify(after, m_after);

    AlterReport rep;
    rep.before = summarize(before, m_before, c_before);
    rep.after = summarize(after, m_after, c_after);
    rep.p = before.edge_count() > 0 ? static_cast<double>(removed_count) /
                                          static_cast<double>(before.edge_count())
                                    : 0.0;
    std::size_t flips = 0;
    for (NodeId v = 0; v < before.node_count(); ++v) {
        flips += c_before.kind[static_cast<std::size_t>(v)] !=
                 c_after.kind[static_cast<std::size_t>(v)];
    }
    rep.delta_nd = before.node_count() > 0
                       ? static_cast<double>(flips) / static_cast<double>(before.node_count())
                       : 0.0;
    rep.mode_before = control_mode(c_before);
    rep.mode_after = control_mode(c_after);
    return rep;
}

AlterReport apply_and_verify(const DiGraph& g, const RemovalPlan& plan) {
    std::vector<Edge> removals;
    removals.reserve(plan.removals.size());
    for (const PlannedRemoval& pr : plan.removals) {
        removals.push_back(pr.edge);
    }
    {
        std::vector<Edge> sorted = removals;
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw VerificationError("plan removes an edge twice", {dup->from, dup->to});
        }
    }
    int prev_rank = -1;
    int create_count = 0;
    for (const PlannedRemoval& pr : plan.removals) {
        const int r = stage_rank(pr.stage);
        if (r < prev_rank) {
            throw VerificationError("plan stages out of order",
                                    {pr.edge.from, pr.edge.to});
        }
        prev_rank = r;
        if (pr.stage == RemovalStage::create_driver) ++create_count;
        if (plan.target_mode == TargetMode::centralized &&
            pr.stage != RemovalStage::detach_driver_inedges) {
            throw VerificationError("centralized plans may only detach driver in-edges",
                                    {pr.edge.from, pr.edge.to});
        }
    }

    const Matching m_before = maximum_matching(g);
    const Classification c_before = classify(g, m_before);
    const DiGraph g_after = g.remove_edges(removals);
    const Matching m_after = maximum_matching(g_after);
    const Classification c_after = classify(g_after, m_after);

    AlterReport rep;
    rep.before = summarize(g, m_before, c_before);
    rep.after = summarize(g_after, m_after, c_after);
    rep.p = g.edge_count() > 0
                ? static_cast<double>(removals.size()) / static_cast<double>(g.edge_count())
                : 0.0;
    std::size_t flips = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        flips += c_before.kind[static_cast<std::size_t>(v)] !=
                 c_after.kind[static_cast<std::size_t>(v)];
    }
    rep.delta_nd = g.node_count() > 0
                       ? static_cast<double>(flips) / static_cast<double>(g.node_count())
                       : 0.0;
    rep.mode_before = control_mode(c_before);
    rep.mode_after = control_mode(c_after);

    if (plan.no_op()) {
        return rep;  // nothing was removed; before == after by construction
    }

    if (plan.target_mode == TargetMode::centralized) {
        if (rep.after.nu != rep.before.nu) {
            throw VerificationError("matching number changed under a centralized plan");
        }
        std::vector<NodeId> missing;
        for (const Edge& e : plan.base_matching) {
            if (!g_after.has_edge(e.from, e.to)) {
                missing.push_back(e.from);
                missing.push_back(e.to);
            }
        }
        if (!missing.empty()) {
            throw VerificationError("plan removed matched edges; original matching broken",
                                    std::move(missing));
        }
        // base_matching survives with nu unchanged, so it is still maximum.
        std::vector<NodeId> still_input;
        for (NodeId v : plan.expected_redundant) {
            if (c_after.kind[static_cast<std::size_t>(v)] != NodeKind::redundant) {
                still_input.push_back(v);
            }
        }
        if (!still_input.empty()) {
            throw VerificationError("targeted component nodes are still input nodes",
                                    std::move(still_input));
        }
    } else {
        if (rep.after.nu != rep.before.nu - 1) {
            throw VerificationError("matching number did not drop by exactly one");
        }
        if (rep.after.input_count <= rep.before.input_count) {
            throw VerificationError("input-node count did not increase");
        }
        if (create_count != 1) {
            throw VerificationError("distributed plan must create exactly one driver");
        }
        std::vector<NodeId> not_input;
        for (NodeId v : plan.expected_new_inputs) {
            if (c_after.kind[static_cast<std::size_t>(v)] != NodeKind::input) {
                not_input.push_back(v);
            }
        }
        if (!not_input.empty()) {
            throw VerificationError("freed reach set contains non-input nodes",
                                    std::move(not_input));
        }
    }
    return rep;
}

std::string plan_to_text(const RemovalPlan& plan, const DiGraph& g) {
    std::string out;
    for (const PlannedRemoval& pr : plan.removals) {
        out += g.display_label(pr.edge.from);
        out += '\t';
        out += g.display_label(pr.edge.to);
        out += '\t';
        out += to_string(pr.stage);
        out += '\n';
    }
    return out;
}

std::string report_to_text(const AlterReport& r) {
    std::string out;
    auto block = [&](const char* prefix, const Summary& s) {
        out += prefix;
        out += "nodes=" + std::to_string(s.nodes) + '\n';
        out += prefix;
        out += "edges=" + std::to_string(s.edges) + '\n';
        out += prefix;
        out += "nu=" + std::to_string(s.nu) + '\n';
        out += prefix;
        out += "input=" + std::to_string(s.input_count) + '\n';
        out += prefix;
        out += "n_d=";
        append_fixed(out, s.n_d);
        out += '\n';
        out += prefix;
        out += "i_d=";
        append_fixed(out, s.i_d);
        out += '\n';
        out += prefix;
        out += "perfect_matching=";
        out += s.perfect_matching ? '1' : '0';
        out += '\n';
    };
    block("before_", r.before);
    block("after_", r.after);
    out += "p=";
    append_fixed(out, r.p);
    out += '\n';
    out += "delta_nd=";
    append_fixed(out, r.delta_nd);
    out += '\n';
    out += "mode_before=";
    out += to_string(r.mode_before);
    out += '\n';
    out += "mode_after=";
    out += to_string(r.mode_after);
    out += '\n';
    return out;
}

std::string report_csv_header() {
    return "nodes,edges_before,edges_after,nu_before,nu_after,input_before,"
           "input_after,n_d_before,n_d_after,i_d_before,i_d_after,p,delta_nd,"
           "mode_before,mode_after";
}

std::string report_csv_row(const AlterReport& r) {
    std::string out;
    out += std::to_string(r.before.nodes) + ',';
    out += std::to_string(r.before.edges) + ',';
    out += std::to_string(r.after.edges) + ',';
    out += std::to_string(r.before.nu) + ',';
    out += std::to_string(r.after.nu) + ',';
    out += std::to_string(r.before.input_count) + ',';
    out += std::to_string(r.after.input_count) + ',';
    append_fixed(out, r.before.n_d);
    out += ',';
    append_fixed(out, r.after.n_d);
    out += ',';
    append_fixed(out, r.before.i_d);
    out += ',';
    append_fixed(out, r.after.i_d);
    out += ',';
    append_fixed(out, r.p);
    out += ',';
    append_fixed(out, r.delta_nd);
    out += ',';
    out += to_string(r.mode_before);
    out += ',';
    out += to_string(r.mode_after);
    return out;
}

const char* to_string(RemovalStage s) {
    switch (s) {
        case RemovalStage::detach_driver_inedges: return "detach_driver_inedges";
        case RemovalStage::detach_unsaturated_outedges: return "detach_unsaturated_outedges";
        case RemovalStage::break_cycle: return "break_cycle";
        case RemovalStage::create_driver: return "create_driver";
    }
    return "unknown";
}

const char* to_string(TargetMode m) {
    return m == TargetMode::centralized ? "centralized" : "distributed";
}

const char* to_string(NoOpReason r) {
    switch (r) {
        case NoOpReason::none: return "none";
        case NoOpReason::no_drivers: return "no-drivers";
        case NoOpReason::no_redundant_component: return "no-redundant-component";
        case NoOpReason::driver_has_no_in_edges: return "driver-has-no-in-edges";
    }
    return "unknown";
}

const char* to_string(ControlMode m) {
    return m == ControlMode::centralized ? "centralized" : "distributed";
}

}  // namespace ctrlmode
