#include <random>
#include <set>
#include <sstream>

#include "ctrlmode/alter.hpp"
#include "ctrlmode/errors.hpp"
#include "ctrlmode/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ctrlmode;

namespace {

std::vector<Edge> plan_edges(const RemovalPlan& plan) {
    std::vector<Edge> out;
    for (const PlannedRemoval& pr : plan.removals) out.push_back(pr.edge);
    return out;
}

bool post_removal_kinds_match_oracle(const DiGraph& g, const RemovalPlan& plan) {
    const DiGraph g2 = g.remove_edges(plan_edges(plan));
    const Classification c = classify(g2, maximum_matching(g2));
    const OracleResult o = enumerate_matchings(g2);
    for (NodeId v = 0; v < g2.node_count(); ++v) {
        const bool is_input = c.kind[static_cast<std::size_t>(v)] == NodeKind::input;
        if (is_input != o.ever_unmatched[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("to_centralized on the out-star detaches the component driver") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    const RemovalPlan plan = to_centralized(g);
    REQUIRE(plan.removals.size() == 1);
    CHECK(plan.removals[0].edge == Edge{0, 2});
    CHECK(plan.removals[0].stage == RemovalStage::detach_driver_inedges);
    CHECK(plan.expected_redundant == std::vector<NodeId>{1});
    CHECK(plan.predicted.delta_nd == doctest::Approx(1.0 / 3.0));

    const AlterReport rep = apply_and_verify(g, plan);
    CHECK(rep.p == doctest::Approx(0.5));
    CHECK(rep.delta_nd == doctest::Approx(1.0 / 3.0));
    CHECK(rep.before.nu == rep.after.nu);
    CHECK(rep.after.input_count == 2);
    // Majority kind after removal: two of three nodes are still input nodes.
    CHECK(rep.mode_after == ControlMode::distributed);
}

TEST_CASE("to_centralized is a no-op when the component driver has no in-edges") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}});
    const RemovalPlan plan = to_centralized(g);
    CHECK(plan.no_op());
    CHECK(plan.no_op_reason == NoOpReason::driver_has_no_in_edges);
    const AlterReport rep = apply_and_verify(g, plan);
    CHECK(rep.p == doctest::Approx(0.0));
    CHECK(rep.delta_nd == doctest::Approx(0.0));
}

TEST_CASE("to_centralized is a no-op on perfect-matching graphs") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
    const RemovalPlan plan = to_centralized(g);
    CHECK(plan.no_op());
    CHECK(plan.no_op_reason == NoOpReason::no_drivers);
}

TEST_CASE("to_distributed detaches the re-augmenting node, then frees a driver") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}, {2, 1}});
    const RemovalPlan plan = to_distributed(g);
    REQUIRE(plan.removals.size() == 2);
    CHECK(plan.removals[0].edge == Edge{2, 1});
    CHECK(plan.removals[0].stage == RemovalStage::detach_unsaturated_outedges);
    CHECK(plan.removals[1].edge == Edge{0, 1});
    CHECK(plan.removals[1].stage == RemovalStage::create_driver);

    const AlterReport rep = apply_and_verify(g, plan);
    CHECK(rep.p == doctest::Approx(2.0 / 3.0));
    CHECK(rep.before.nu == 2);
    CHECK(rep.after.nu == 1);
    CHECK(rep.before.input_count == 1);
    CHECK(rep.after.input_count == 2);
}

TEST_CASE("to_distributed on a path removes one matched edge") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}});
    const RemovalPlan plan = to_distributed(g);
    REQUIRE(plan.removals.size() == 1);
    CHECK(plan.removals[0].edge == Edge{0, 1});
    CHECK(plan.removals[0].stage == RemovalStage::create_driver);
    const AlterReport rep = apply_and_verify(g, plan);
    CHECK(rep.after.input_count == 2);
    CHECK(rep.after.nu == 1);
}

TEST_CASE("to_distributed is a no-op when every node is already an input node") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    const RemovalPlan plan = to_distributed(g);
    CHECK(plan.no_op());
    CHECK(plan.no_op_reason == NoOpReason::no_redundant_component);
}

TEST_CASE("to_distributed breaks a swap cycle before freeing the best driver") {
    // 0->1 and 2->3 matched; 0->3 and 2->1 close an alternating cycle whose
    // swap matching keeps nu at 2.
    const DiGraph g = testutil::graph_of(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
    const RemovalPlan plan = to_distributed(g);
    REQUIRE(plan.removals.size() == 2);
    CHECK(plan.removals[0].edge == Edge{0, 1});
    CHECK(plan.removals[0].stage == RemovalStage::break_cycle);
    CHECK(plan.removals[1].edge == Edge{0, 3});
    CHECK(plan.removals[1].stage == RemovalStage::create_driver);

    const AlterReport rep = apply_and_verify(g, plan);
    CHECK(rep.before.nu == 2);
    CHECK(rep.after.nu == 1);
    CHECK(rep.before.input_count == 2);
    // Freeing 3- also leaves 0+ unmatched; the oracle confirms every node is
    // an input node of the mutated graph.
    CHECK(rep.after.input_count == 4);
}

TEST_CASE("find_alternating_cycles: acyclic matched structures yield nothing") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {1, 2}});
    const Matching m = maximum_matching(g);
    const NodeId scope[] = {0, 1, 2};
    CHECK(find_alternating_cycles(g, m, scope).empty());
}

TEST_CASE("find_alternating_cycles reports the swap cycle once") {
    const DiGraph g = testutil::graph_of(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
    const Matching m = maximum_matching(g);
    REQUIRE(m.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    const NodeId scope[] = {1, 3};
    const auto cycles = find_alternating_cycles(g, m, scope);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}, {2, 1}});
}

TEST_CASE("find_alternating_cycles: matched digraph cycles have no swap slack") {
    // Removing any matched edge of a perfectly matched digraph cycle drops
    // nu, so no swap-preserving alternating cycle is reported.
    const DiGraph g3 = testutil::graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
    const Matching m3 = maximum_matching(g3);
    REQUIRE(m3.nu() == 3);
    const NodeId all3[] = {0, 1, 2};
    CHECK(find_alternating_cycles(g3, m3, all3).empty());

    const DiGraph g2 = testutil::graph_of(2, {{0, 1}, {1, 0}});
    const Matching m2 = maximum_matching(g2);
    REQUIRE(m2.nu() == 2);
    const NodeId all2[] = {0, 1};
    CHECK(find_alternating_cycles(g2, m2, all2).empty());
}

TEST_CASE("apply_and_verify of an empty plan changes nothing") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    RemovalPlan plan;
    plan.target_mode = TargetMode::centralized;
    plan.no_op_reason = NoOpReason::no_drivers;
    const AlterReport rep = apply_and_verify(g, plan);
    CHECK(rep.p == doctest::Approx(0.0));
    CHECK(rep.delta_nd == doctest::Approx(0.0));
    CHECK(rep.before.nu == rep.after.nu);
    CHECK(rep.before.input_count == rep.after.input_count);
}

TEST_CASE("apply_and_verify rejects duplicate removals and stage disorder") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    RemovalPlan dup;
    dup.target_mode = TargetMode::centralized;
    dup.removals = {{{0, 2}, RemovalStage::detach_driver_inedges},
                    {{0, 2}, RemovalStage::detach_driver_inedges}};
    CHECK_THROWS_AS((void)apply_and_verify(g, dup), VerificationError);

    RemovalPlan disorder;
    disorder.target_mode = TargetMode::distributed;
    disorder.removals = {{{0, 1}, RemovalStage::create_driver},
                         {{0, 2}, RemovalStage::break_cycle}};
    CHECK_THROWS_AS((void)apply_and_verify(g, disorder), VerificationError);
}

TEST_CASE("apply_and_verify rejects stale plans whose edges are gone") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    RemovalPlan plan = to_centralized(g);
    const DiGraph g2 = g.remove_edges(plan_edges(plan));
    CHECK_THROWS_AS((void)apply_and_verify(g2, plan), Error);
}

TEST_CASE("centralized conversions keep the matching and empty the component") {
    std::mt19937_64 rng(2024);
    int converted = 0;
    for (int iter = 0; iter < 120; ++iter) {
        const auto n = static_cast<NodeId>(2 + rng() % 14);
        const DiGraph g = testutil::random_digraph(rng, n, 0.25, false);
        const RemovalPlan plan = to_centralized(g);
        const AlterReport rep = apply_and_verify(g, plan);  // throws on violation
        CHECK(rep.after.nu == rep.before.nu);
        if (!plan.no_op()) {
            ++converted;
            CHECK(rep.delta_nd == doctest::Approx(plan.predicted.delta_nd));
            if (n <= 8) CHECK(post_removal_kinds_match_oracle(g, plan));
        }
    }
    CHECK(converted > 30);
}

TEST_CASE("distributed conversions drop nu by one and grow the input set") {
    std::mt19937_64 rng(2025);
    int converted = 0;
    for (int iter = 0; iter < 150 || converted < 40; ++iter) {
        const auto n = static_cast<NodeId>(2 + rng() % 14);
        const DiGraph g = testutil::random_digraph(rng, n, 0.3, false);
        const RemovalPlan plan = to_distributed(g);
        const AlterReport rep = apply_and_verify(g, plan);  // throws on violation
        if (plan.no_op()) {
            CHECK(plan.no_op_reason == NoOpReason::no_redundant_component);
            continue;
        }
        ++converted;
        CHECK(rep.after.nu == rep.before.nu - 1);
        CHECK(rep.after.input_count > rep.before.input_count);
        CHECK(rep.delta_nd == doctest::Approx(plan.predicted.delta_nd));
        int creates = 0;
        for (const PlannedRemoval& pr : plan.removals) {
            creates += pr.stage == RemovalStage::create_driver;
        }
        CHECK(creates == 1);
        if (n <= 8) CHECK(post_removal_kinds_match_oracle(g, plan));
        if (iter > 4000) break;
    }
    CHECK(converted >= 40);
}

TEST_CASE("plans are deterministic for a fixed graph") {
    std::mt19937_64 rng(2026);
    for (int iter = 0; iter < 40; ++iter) {
        const auto n = static_cast<NodeId>(2 + rng() % 16);
        const DiGraph g = testutil::random_digraph(rng, n, 0.3, false);
        CHECK(to_centralized(g).removals == to_centralized(g).removals);
        CHECK(to_distributed(g).removals == to_distributed(g).removals);
    }
}

TEST_CASE("plan and report serializers") {
    const DiGraph g = testutil::graph_of(3, {{0, 1}, {0, 2}});
    const RemovalPlan plan = to_centralized(g);
    CHECK(plan_to_text(plan, g) == "0\t2\tdetach_driver_inedges\n");

    const AlterReport rep = apply_and_verify(g, plan);
    const std::string text = report_to_text(rep);
    CHECK(text.find("p=0.500000") != std::string::npos);
    CHECK(text.find("delta_nd=0.333333") != std::string::npos);
    CHECK(text.find("mode_before=distributed") != std::string::npos);

    const std::string header = report_csv_header();
    const std::string row = report_csv_row(rep);
    const auto commas = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ',');
    };
    CHECK(commas(header) == commas(row));
}
