// ctrlmode command-line tool: classify / alter / generate / sweep /
// oracle-check over whitespace-separated edge-list files. The CLI is a thin
// composition of the core library; all algorithmic logic lives there.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ctrlmode/alter.hpp"
#include "ctrlmode/control.hpp"
#include "ctrlmode/errors.hpp"
#include "ctrlmode/generate.hpp"
#include "ctrlmode/matching.hpp"
#include "ctrlmode/oracle.hpp"
#include "ctrlmode/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNoOp = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ctrlmode::Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content, bool append = false) {
    std::ofstream out(path, append ? std::ios::binary | std::ios::app : std::ios::binary);
    if (!out) {
        throw ctrlmode::Error("cannot write " + path);
    }
    out << content;
}

ctrlmode::DiGraph load_graph(const std::string& path) {
    try {
        return ctrlmode::DiGraph::parse_edge_list(read_file(path));
    } catch (const ctrlmode::ParseError& e) {
        throw ctrlmode::Error(path + ": " + e.what());
    }
}

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct ClassifyArgs {
    std::string path;
    std::string out;
    bool nodes = false;
    bool quiet = false;
};

int cmd_classify(const ClassifyArgs& args) {
    using namespace ctrlmode;
    const DiGraph g = load_graph(args.path);
    if (g.node_count() == 0) {
        throw Error(args.path + ": empty graph");
    }
    const Matching m = maximum_matching(g);
    const Classification c = classify(g, m);
    const ControlComponents comps = components(g, m, c);

    std::size_t cc_size = 0;
    char cc_tag = '-';
    auto consider = [&](int index, char tag) {
        if (index < 0) return;
        const auto size = comps.components[static_cast<std::size_t>(index)].size();
        if (size > cc_size) {
            cc_size = size;
            cc_tag = tag;
        }
    };
    // Size ties go to the input side.
    consider(comps.largest_redundant, 'R');
    consider(comps.largest_input, 'I');

    const double n = static_cast<double>(g.node_count());
    std::string out;
    out += "n=" + std::to_string(g.node_count()) + '\n';
    out += "L=" + std::to_string(g.edge_count()) + '\n';
    out += "k_avg=" + fixed6(g.average_degree()) + '\n';
    out += "nu=" + std::to_string(m.nu()) + '\n';
    out += "drivers=" + std::to_string(c.drivers.size()) + '\n';
    out += "n_mds=" + fixed6(c.n_d) + '\n';
    out += "i_d=" + fixed6(c.i_d) + '\n';
    out += "cc_max_size=" + std::to_string(cc_size) + '\n';
    out += "cc_max_frac=" + fixed6(static_cast<double>(cc_size) / n) + '\n';
    out += std::string("cc_max_tag=") + cc_tag + '\n';
    out += std::string("perfect_matching=") + (c.perfect_matching ? "1" : "0") + '\n';
    out += std::string("mode=") + to_string(control_mode(c)) + '\n';
    if (args.nodes) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            out += g.display_label(v);
            out += '\t';
            out += c.kind[static_cast<std::size_t>(v)] == NodeKind::input ? "input"
                                                                          : "redundant";
            out += '\n';
        }
    }
    if (!args.out.empty()) {
        write_file(args.out, out);
    }
    if (!args.quiet) {
        std::cout << out;
    }
    return kExitOk;
}

struct AlterArgs {
    std::string path;
    ctrlmode::TargetMode to{};
    int iterations = 1;
    std::string out_plan;
    std::string out_graph;
    bool quiet = false;
};

int cmd_alter(const AlterArgs& args) {
    using namespace ctrlmode;
    const DiGraph original = load_graph(args.path);
    if (original.node_count() == 0) {
        throw Error(args.path + ": empty graph");
    }

    DiGraph current = original;
    std::vector<PlannedRemoval> all_removals;
    NoOpReason first_noop = NoOpReason::none;
    for (int it = 0; it < args.iterations; ++it) {
        const RemovalPlan plan = args.to == TargetMode::centralized
                                     ? to_centralized(current)
                                     : to_distributed(current);
        if (plan.no_op()) {
            if (it == 0) first_noop = plan.no_op_reason;
            break;
        }
        apply_and_verify(current, plan);  // throws on guarantee violation
        std::vector<Edge> edges;
        edges.reserve(plan.removals.size());
        for (const PlannedRemoval& pr : plan.removals) {
            all_removals.push_back(pr);
            edges.push_back(pr.edge);
        }
        current = current.remove_edges(edges);
    }

    const AlterReport report = compare_states(original, current, all_removals.size());
    if (!args.out_plan.empty()) {
        RemovalPlan combined;
        combined.target_mode = args.to;
        combined.removals = all_removals;
        write_file(args.out_plan, plan_to_text(combined, original));
    }
    if (!args.out_graph.empty()) {
        write_file(args.out_graph, current.write_edge_list());
    }
    if (!args.quiet) {
        std::cout << report_to_text(report);
        std::cout << "removed=" << all_removals.size() << '\n';
        if (first_noop != NoOpReason::none) {
            std::cout << "no_op_reason=" << to_string(first_noop) << '\n';
        }
    }
    return first_noop != NoOpReason::none ? kExitNoOp : kExitOk;
}

struct GenerateArgs {
    ctrlmode::GenParams params;
    std::string out;
};

int cmd_generate(const GenerateArgs& args) {
    const ctrlmode::DiGraph g = ctrlmode::generate(args.params);
    const std::string text = g.write_edge_list();
    if (!args.out.empty()) {
        write_file(args.out, text);
    } else {
        std::cout << text;
    }
    return kExitOk;
}

struct SweepArgs {
    ctrlmode::SweepParams params;
    std::string out;
    bool append = false;
    bool quiet = false;
};

int cmd_sweep(const SweepArgs& args) {
    using namespace ctrlmode;
    const std::vector<SweepRecord> records = run_sweep(args.params);
    const std::string csv = sweep_csv(records, !args.append);
    if (!args.out.empty()) {
        write_file(args.out, csv, args.append);
    } else {
        std::cout << csv;
    }
    std::size_t failed = 0;
    for (const SweepRecord& r : records) failed += r.failed;
    if (failed > 0 && !args.quiet) {
        std::cerr << "warning: " << failed << " of " << records.size()
                  << " cells failed (see # error lines)\n";
    }
    return kExitOk;
}

struct OracleArgs {
    std::string path;
    std::string out;
    bool quiet = false;
};

int cmd_oracle_check(const OracleArgs& args) {
    using namespace ctrlmode;
    const DiGraph g = load_graph(args.path);
    const OracleResult oracle = enumerate_matchings(g);
    const Matching m = maximum_matching(g);
    const Classification c = classify(g, m);

    bool mismatch = oracle.nu != m.nu();
    std::string out;
    out += "nu=" + std::to_string(oracle.nu) + '\n';
    out += "maximum_matchings=" + std::to_string(oracle.count) + '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const bool oracle_input = oracle.ever_unmatched[static_cast<std::size_t>(v)];
        const bool classified_input =
            c.kind[static_cast<std::size_t>(v)] == NodeKind::input;
        if (oracle_input != classified_input) mismatch = true;
        out += g.display_label(v);
        out += '\t';
        out += oracle_input ? "input" : "redundant";
        out += '\t';
        out += classified_input ? "input" : "redundant";
        out += '\n';
    }
    out += std::string("verdict=") + (mismatch ? "MISMATCH" : "OK") + '\n';
    if (!args.out.empty()) {
        write_file(args.out, out);
    }
    if (!args.quiet) {
        std::cout << out;
    }
    return mismatch ? kExitFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"control-mode analysis and rewiring for directed networks"};
    app.require_subcommand(1);

    const std::map<std::string, ctrlmode::TargetMode> mode_map{
        {"centralized", ctrlmode::TargetMode::centralized},
        {"distributed", ctrlmode::TargetMode::distributed},
    };
    const std::map<std::string, ctrlmode::GenModel> model_map{
        {"sf", ctrlmode::GenModel::sf},
        {"er", ctrlmode::GenModel::er},
    };
    const std::map<std::string, ctrlmode::SweepDirection> direction_map{
        {"both", ctrlmode::SweepDirection::opposing},
        {"centralized", ctrlmode::SweepDirection::centralized},
        {"distributed", ctrlmode::SweepDirection::distributed},
    };

    ClassifyArgs classify_args;
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify every node as input or redundant");
    classify_cmd->add_option("path", classify_args.path, "edge-list file")->required();
    classify_cmd->add_flag("--nodes", classify_args.nodes,
                           "also print one 'label kind' line per node");
    classify_cmd->add_option("--out", classify_args.out, "write the report to a file");
    classify_cmd->add_flag("--quiet", classify_args.quiet, "suppress stdout");

    AlterArgs alter_args;
    auto* alter_cmd = app.add_subcommand("alter", "Plan and apply a control-mode conversion");
    alter_cmd->add_option("path", alter_args.path, "edge-list file")->required();
    alter_cmd->add_option("--to", alter_args.to, "target control mode")
        ->required()
        ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
    alter_cmd->add_option("--iterations", alter_args.iterations,
                          "reapply until no-op, at most this many times")
        ->check(CLI::PositiveNumber);
    alter_cmd->add_option("--out-plan", alter_args.out_plan,
                          "write removals as 'u v stage' lines");
    alter_cmd->add_option("--out-graph", alter_args.out_graph,
                          "write the mutated graph as an edge list");
    alter_cmd->add_flag("--quiet", alter_args.quiet, "suppress stdout");

    GenerateArgs gen_args;
    auto* gen_cmd = app.add_subcommand("generate", "Generate a synthetic network");
    gen_cmd->add_option("--n", gen_args.params.n, "node count")->required();
    gen_cmd->add_option("--k", gen_args.params.k_avg, "target average degree 2L/n")
        ->required();
    gen_cmd->add_option("--model", gen_args.params.model, "sf (scale-free) or er (uniform)")
        ->transform(CLI::CheckedTransformer(model_map, CLI::ignore_case));
    gen_cmd->add_option("--gamma-in", gen_args.params.gamma_in, "in-degree exponent");
    gen_cmd->add_option("--gamma-out", gen_args.params.gamma_out, "out-degree exponent");
    gen_cmd->add_option("--seed", gen_args.params.seed, "64-bit RNG seed");
    gen_cmd->add_option("--out", gen_args.out, "output edge-list file (default stdout)");

    SweepArgs sweep_args;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Generate/classify/alter over a degree sweep, emit CSV");
    sweep_cmd->add_option("--model", sweep_args.params.model, "sf or er")
        ->transform(CLI::CheckedTransformer(model_map, CLI::ignore_case));
    sweep_cmd->add_option("--n", sweep_args.params.n, "node count per instance");
    sweep_cmd->add_option("--k-min", sweep_args.params.k_min, "first average degree");
    sweep_cmd->add_option("--k-max", sweep_args.params.k_max, "last average degree");
    sweep_cmd->add_option("--k-step", sweep_args.params.k_step, "degree increment");
    sweep_cmd->add_option("--reps", sweep_args.params.reps, "instances per degree");
    sweep_cmd->add_option("--seed", sweep_args.params.seed, "64-bit master seed");
    sweep_cmd->add_option("--direction", sweep_args.params.direction,
                          "both (oppose observed mode), centralized, distributed")
        ->transform(CLI::CheckedTransformer(direction_map, CLI::ignore_case));
    sweep_cmd->add_option("--threads", sweep_args.params.threads,
                          "worker threads (0 = hardware)");
    sweep_cmd->add_option("--out", sweep_args.out, "output CSV file (default stdout)");
    sweep_cmd->add_flag("--append", sweep_args.append,
                        "append rows without the header (shardable)");
    sweep_cmd->add_flag("--quiet", sweep_args.quiet, "suppress warnings");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "Exhaustively verify the classification of a tiny graph");
    oracle_cmd->add_option("path", oracle_args.path, "edge-list file")->required();
    oracle_cmd->add_option("--out", oracle_args.out, "write the report to a file");
    oracle_cmd->add_flag("--quiet", oracle_args.quiet, "suppress stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep the exit-code contract: 0 ok (incl. --help), 1 for any failure.
        return app.exit(e) == 0 ? kExitOk : kExitFailure;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(classify_args);
        if (app.got_subcommand(alter_cmd)) return cmd_alter(alter_args);
        if (app.got_subcommand(gen_cmd)) return cmd_generate(gen_args);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep_args);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle_check(oracle_args);
    } catch (const ctrlmode::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
