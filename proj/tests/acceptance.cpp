// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.
//
// The s208a regression needs an external dataset; it is skipped (not failed)
// unless CTRLMODE_S208A points at the edge-list file or data/s208a.txt
// exists.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctrlmode/alter.hpp"
#include "ctrlmode/control.hpp"
#include "ctrlmode/errors.hpp"
#include "ctrlmode/generate.hpp"
#include "ctrlmode/matching.hpp"
#include "ctrlmode/oracle.hpp"
#include "ctrlmode/sweep.hpp"
#include "test_util.hpp"

using namespace ctrlmode;

namespace {

struct Outcome {
    bool pass = false;
    bool skip = false;
    std::string detail;
};

double g_sweep_seconds = -1.0;  // measured by criterion 7, checked by 9

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// 1. Alternating-path classification equals the enumerate-all-maximum-
//    matchings classification on >= 1000 random digraphs, and nu agrees.
Outcome oracle_equivalence() {
    std::mt19937_64 rng(0xC0FFEE);
    int graphs = 0;
    for (int p_idx = 1; p_idx <= 9; ++p_idx) {
        const double p = 0.1 * p_idx;
        for (int rep = 0; rep < 125; ++rep) {
            const auto n = static_cast<NodeId>(1 + rng() % 8);
            const DiGraph g = testutil::random_digraph(rng, n, p);
            ++graphs;
            const OracleResult o = enumerate_matchings(g);
            const Matching m = maximum_matching(g);
            if (m.nu() != o.nu) {
                return {false, false,
                        fmt("nu mismatch (%d vs %d) on graph %d", m.nu(), o.nu, graphs)};
            }
            const Classification c = classify(g, m);
            for (NodeId v = 0; v < n; ++v) {
                const bool is_input = c.kind[static_cast<std::size_t>(v)] == NodeKind::input;
                if (is_input != o.ever_unmatched[static_cast<std::size_t>(v)]) {
                    return {false, false,
                            fmt("kind mismatch at node %d on graph %d", v, graphs)};
                }
            }
        }
    }
    return {true, false, fmt("%d graphs, all nodes agree", graphs)};
}

// 2. After to_centralized on scale-free graphs: nu unchanged, the original
//    matching still maximum, every targeted node redundant.
Outcome theorem_one_suite() {
    int converted = 0, graphs = 0;
    for (int k = 2; k <= 10; ++k) {
        for (int rep = 0; rep < 25; ++rep) {
            GenParams gp;
            gp.n = 100;
            gp.k_avg = static_cast<double>(k);
            gp.seed = 1000003ull * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(rep);
            gp.model = GenModel::sf;
            const DiGraph g = generate(gp);
            ++graphs;
            const RemovalPlan plan = to_centralized(g);
            try {
                const AlterReport rep_out = apply_and_verify(g, plan);
                if (rep_out.after.nu != rep_out.before.nu) {
                    return {false, false, fmt("nu changed on graph %d", graphs)};
                }
            } catch (const VerificationError& e) {
                return {false, false, fmt("graph %d: %s", graphs, e.what())};
            }
            if (!plan.no_op()) ++converted;
        }
    }
    return {true, false, fmt("%d graphs, %d non-trivial plans verified", graphs, converted)};
}

// 3. After to_distributed on graphs with a redundant component: nu drops by
//    exactly one, the input count strictly increases, stages stay ordered.
Outcome algorithm_two_suite() {
    std::mt19937_64 rng(0xA15);
    int converted = 0, attempts = 0;
    while (converted < 200 && attempts < 4000) {
        ++attempts;
        GenParams gp;
        gp.n = static_cast<NodeId>(20 + rng() % 120);
        gp.k_avg = 2.0 + 0.5 * static_cast<double>(rng() % 9);
        gp.seed = rng();
        gp.model = (attempts % 2 == 0) ? GenModel::sf : GenModel::er;
        const DiGraph g = generate(gp);
        const RemovalPlan plan = to_distributed(g);
        if (plan.no_op()) continue;
        try {
            const AlterReport rep = apply_and_verify(g, plan);
            if (rep.after.nu != rep.before.nu - 1) {
                return {false, false, fmt("nu drop != 1 on attempt %d", attempts)};
            }
            if (rep.after.input_count <= rep.before.input_count) {
                return {false, false, fmt("input count did not grow on attempt %d", attempts)};
            }
        } catch (const VerificationError& e) {
            return {false, false, fmt("attempt %d: %s", attempts, e.what())};
        }
        ++converted;
    }
    if (converted < 200) {
        return {false, false, fmt("only %d qualifying graphs in %d attempts", converted, attempts)};
    }
    return {true, false, fmt("%d conversions verified", converted)};
}

// 4. Classification is identical under ascending and descending scan order.
Outcome matching_invariance() {
    std::mt19937_64 rng(0x1401);
    int graphs = 0;
    for (int iter = 0; iter < 220; ++iter) {
        const auto n = static_cast<NodeId>(1 + rng() % 40);
        const double p = 0.05 + 0.01 * static_cast<double>(rng() % 30);
        const DiGraph g = testutil::random_digraph(rng, n, p);
        ++graphs;
        const Classification asc = classify(g, maximum_matching(g, ScanOrder::ascending));
        const Classification desc = classify(g, maximum_matching(g, ScanOrder::descending));
        if (asc.kind != desc.kind) {
            return {false, false, fmt("kinds differ on graph %d", graphs)};
        }
    }
    return {true, false, fmt("%d graphs invariant", graphs)};
}

// 5. Dense-network efficiency: one distributed sf graph at n = 10^4,
//    <k> = 15 converts with p <= 0.01 and delta_nd >= 0.6.
Outcome dense_efficiency() {
    GenParams gp;
    gp.n = 10000;
    gp.k_avg = 15.0;
    gp.seed = 3;  // distributed branch of the bimodal regime
    gp.model = GenModel::sf;
    const DiGraph g = generate(gp);
    const Classification c = classify(g, maximum_matching(g));
    if (control_mode(c) != ControlMode::distributed) {
        return {false, false, fmt("graph is not distributed (i_d=%.3f); seed needs attention", c.i_d)};
    }
    const RemovalPlan plan = to_centralized(g);
    const AlterReport rep = apply_and_verify(g, plan);
    const bool ok = rep.p <= 0.01 && rep.delta_nd >= 0.6;
    return {ok, false, fmt("p=%.4f (<=0.01), delta_nd=%.3f (>=0.6)", rep.p, rep.delta_nd)};
}

// 6. Sparse-network efficiency: ensemble mean over 10 sf graphs at n = 10^4,
//    <k> = 6: mean p <= 0.12 and mean delta_nd >= 0.15.
Outcome sparse_efficiency() {
    double sum_p = 0.0, sum_delta = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        GenParams gp;
        gp.n = 10000;
        gp.k_avg = 6.0;
        gp.seed = 100 + static_cast<std::uint64_t>(rep);
        gp.model = GenModel::sf;
        const DiGraph g = generate(gp);
        const AlterReport out = apply_and_verify(g, to_centralized(g));
        sum_p += out.p;
        sum_delta += out.delta_nd;
    }
    const double mean_p = sum_p / 10.0, mean_delta = sum_delta / 10.0;
    const bool ok = mean_p <= 0.12 && mean_delta >= 0.15;
    return {ok, false, fmt("mean p=%.4f (<=0.12), mean delta_nd=%.3f (>=0.15)", mean_p, mean_delta)};
}

// 7. Bimodality: over the desk-scale sweep, mean N_D strictly decreases with
//    k, and at k = 30 the per-rep I_D values hit both branches.
Outcome bimodality() {
    SweepParams sp;
    sp.model = GenModel::sf;
    sp.n = 2000;
    sp.k_min = 5.0;
    sp.k_max = 40.0;
    sp.k_step = 5.0;
    sp.reps = 20;
    sp.seed = 7;
    sp.direction = SweepDirection::opposing;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<SweepRecord> records = run_sweep(sp);
    g_sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const SweepRecord& r : records) {
        if (r.failed) return {false, false, "sweep cell failed: " + r.error};
    }
    std::vector<double> mean_nd(8, 0.0);
    bool high = false, low = false;
    for (const SweepRecord& r : records) {
        const auto k_idx = static_cast<std::size_t>((r.k_target - 5.0) / 5.0 + 0.5);
        mean_nd[k_idx] += r.n_d / 20.0;
        if (r.k_target == 30.0) {
            high = high || r.i_d > 0.7;
            low = low || r.i_d < 0.3;
        }
    }
    for (std::size_t i = 1; i < mean_nd.size(); ++i) {
        if (!(mean_nd[i] < mean_nd[i - 1])) {
            return {false, false,
                    fmt("mean N_D not strictly decreasing at k=%zu (%.4f -> %.4f)",
                        5 * (i + 1), mean_nd[i - 1], mean_nd[i])};
        }
    }
    if (!high || !low) {
        return {false, false,
                fmt("k=30 reps missed a branch (has >0.7: %d, has <0.3: %d)", high, low)};
    }
    return {true, false,
            fmt("N_D means decreasing, k=30 I_D spans both branches (%.0fs)", g_sweep_seconds)};
}

// 8. Optional dataset regression: the s208a circuit must have exactly 29
//    drivers out of 122 nodes (matching number is matching-choice-invariant).
Outcome s208a_regression() {
    std::string path;
    if (const char* env = std::getenv("CTRLMODE_S208A")) path = env;
    if (path.empty()) {
        std::ifstream probe("data/s208a.txt");
        if (probe.good()) path = "data/s208a.txt";
    }
    if (path.empty()) {
        return {true, true, "dataset not supplied (set CTRLMODE_S208A)"};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return {false, false, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    const DiGraph g = DiGraph::parse_edge_list(ss.str());
    if (g.node_count() != 122 || g.edge_count() != 189) {
        return {false, false,
                fmt("expected 122 nodes / 189 edges, got %d / %zu", g.node_count(),
                    g.edge_count())};
    }
    const Classification c = classify(g, maximum_matching(g));
    if (c.drivers.size() != 29) {
        return {false, false, fmt("expected 29 drivers, got %zu", c.drivers.size())};
    }
    return {true, false, fmt("n_mds = 29/122 = %.4f", c.n_d)};
}

// 9. Performance: classify at n = 10^5, L = 10^6 under 30 s; the criterion-7
//    sweep under 5 minutes.
Outcome performance() {
    GenParams gp;
    gp.n = 100000;
    gp.k_avg = 20.0;
    gp.seed = 9;
    gp.model = GenModel::sf;
    const DiGraph g = generate(gp);
    const auto t0 = std::chrono::steady_clock::now();
    const Matching m = maximum_matching(g);
    const Classification c = classify(g, m);
    const ControlComponents cc = components(g, m, c);
    const double classify_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    (void)cc;
    if (classify_seconds >= 30.0) {
        return {false, false, fmt("classify took %.1fs (>=30s)", classify_seconds)};
    }
    if (g_sweep_seconds < 0.0) {
        return {false, false, "sweep timing unavailable (criterion 7 did not run)"};
    }
    if (g_sweep_seconds >= 300.0) {
        return {false, false, fmt("desk-scale sweep took %.0fs (>=300s)", g_sweep_seconds)};
    }
    return {true, false,
            fmt("classify 10^5/10^6 in %.1fs, sweep in %.0fs", classify_seconds, g_sweep_seconds)};
}

}  // namespace

int main(int argc, char** argv) {
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle-equivalence", oracle_equivalence},
        {"theorem-1-suite", theorem_one_suite},
        {"algorithm-2-suite", algorithm_two_suite},
        {"matching-invariance", matching_invariance},
        {"dense-efficiency", dense_efficiency},
        {"sparse-efficiency", sparse_efficiency},
        {"bimodality", bimodality},
        {"s208a-regression", s208a_regression},
        {"performance", performance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (only != 0 && only != number) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* tag = out.skip ? "SKIP" : (out.pass ? "PASS" : "FAIL");
        std::printf("%s %d %s (%s) [%.1fs]\n", tag, number, criteria[i].first.c_str(),
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass && !out.skip) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
