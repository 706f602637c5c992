#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctrlmode/control.hpp"
#include "ctrlmode/digraph.hpp"
#include "ctrlmode/matching.hpp"

namespace ctrlmode {

enum class TargetMode : std::uint8_t { centralized, distributed };

/// Which stage of a conversion produced a removal.
enum class RemovalStage : std::uint8_t {
    detach_driver_inedges,       // centralized: in-edges of drivers in the target component
    detach_unsaturated_outedges, // distributed: out-edges of unsaturated nodes reaching it
    break_cycle,                 // distributed: one matched edge per alternating cycle
    create_driver,               // distributed: the final matched edge whose removal frees a driver
};

enum class NoOpReason : std::uint8_t {
    none,
    no_drivers,               // perfect matching: no input components to convert
    no_redundant_component,   // already fully distributed
    driver_has_no_in_edges,   // target component's drivers cannot be detached
};

struct PlannedRemoval {
    Edge edge{};
    RemovalStage stage{};

    friend constexpr auto operator<=>(const PlannedRemoval&, const PlannedRemoval&) = default;
};

/// Expected post-removal summary, computed at planning time.
struct PlanForecast {
    double n_d = 0.0;
    double i_d = 0.0;
    double delta_nd = 0.0;  // forecast fraction of nodes whose kind flips
};

/// An ordered edge-removal plan converting a graph toward one control mode.
/// Plans are deterministic for a fixed graph. An empty plan is a no-op and
/// carries a machine-readable reason.
struct RemovalPlan {
    TargetMode target_mode{};
    std::vector<PlannedRemoval> removals;
    PlanForecast predicted;
    NoOpReason no_op_reason = NoOpReason::none;

    // Verification context, filled in by the planners.
    std::vector<Edge> base_matching;           // the maximum matching the plan was built on
    std::vector<NodeId> expected_redundant;    // centralized: nodes that must flip to redundant
    std::vector<NodeId> expected_new_inputs;   // distributed: nodes that must be input afterwards

    bool no_op() const { return removals.empty(); }
};

/// Before/after summary of one applied plan.
struct Summary {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    int nu = 0;
    std::size_t input_count = 0;
    double n_d = 0.0;
    double i_d = 0.0;
    bool perfect_matching = false;
};

struct AlterReport {
    Summary before, after;
    double p = 0.0;         // |removals| / |E before|
    double delta_nd = 0.0;  // measured fraction of nodes whose kind flipped
    ControlMode mode_before{}, mode_after{};
};

/// Plan the conversion toward centralized control: find the largest merged
/// driver-reach component P_max and remove every in-edge of each driver in
/// it. All removed edges are unmatched, so the matching (and every control
/// scheme it encodes) survives; every non-driver node of P_max becomes
/// redundant.
RemovalPlan to_centralized(const DiGraph& g);

/// Plan the conversion toward distributed control, targeting the largest
/// redundant component C*:
///  1. detach: remove all out-edges of every unsaturated node whose
///     alternating reach touches C*, so no freed node can re-augment;
///  2. break_cycle: while the matched structure of C* contains an
///     alternating cycle, remove one matched edge of it (smallest (u, v)
///     pair among cycle edges) and rematch -- the matching number is
///     unchanged because the cycle's swap matching survives;
///  3. create_driver: remove the matched edge of C* whose removal maximizes
///     the alternating reach of the freed node (ties toward the smallest
///     (u, v) pair).
/// Afterwards the matching number drops by exactly one and the input-node
/// count strictly increases.
RemovalPlan to_distributed(const DiGraph& g);

/// Alternating cycles in the matched structure spanned by `scope`: one
/// representative cycle per strongly connected region of the contraction
/// graph whose supernodes are matched edges and whose arcs are the unmatched
/// edges between them. Each cycle is returned as its edge sequence,
/// alternating matched/unmatched around the cycle. An empty result certifies
/// the scoped structure is acyclic; the enumeration is deliberately not
/// exhaustive (break one, rematch, search again).
std::vector<std::vector<Edge>> find_alternating_cycles(const DiGraph& g,
                                                       const Matching& m,
                                                       std::span<const NodeId> scope);

/// Apply `plan` to a copy of g, recompute matching and classification from
/// scratch, and report before/after. Verifies the plan's guarantees
/// (matching number preserved and targeted nodes redundant for centralized;
/// matching number down one, input growth and stage ordering for
/// distributed) and throws VerificationError carrying the counterexample
/// nodes when violated.
AlterReport apply_and_verify(const DiGraph& g, const RemovalPlan& plan);

/// Report comparing two graph states directly, classifying each from
/// scratch. Used for iterated conversions, where the per-step guarantees
/// were already verified step by step.
AlterReport compare_states(const DiGraph& before, const DiGraph& after,
                           std::size_t removed_count);

/// Plan serialization: edge-list lines with a third column for the stage tag.
std::string plan_to_text(const RemovalPlan& plan, const DiGraph& g);

/// Report serialization: flat key=value block, and a single CSV row.
std::string report_to_text(const AlterReport& r);
std::string report_csv_header();
std::string report_csv_row(const AlterReport& r);

const char* to_string(RemovalStage s);
const char* to_string(TargetMode m);
const char* to_string(NoOpReason r);
const char* to_string(ControlMode m);

}  // namespace ctrlmode
