#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctrlmode/alter.hpp"
#include "ctrlmode/control.hpp"
#include "ctrlmode/generate.hpp"

namespace ctrlmode {

/// Which conversion a sweep cell runs. `opposing` picks the direction that
/// opposes the observed mode of each generated graph.
enum class SweepDirection : std::uint8_t { opposing, centralized, distributed };

struct SweepParams {
    GenModel model = GenModel::sf;
    NodeId n = 2000;
    double k_min = 5.0;
    double k_max = 40.0;
    double k_step = 5.0;
    int reps = 20;
    std::uint64_t seed = 0;
    SweepDirection direction = SweepDirection::opposing;
    double gamma_in = 3.0;
    double gamma_out = 3.0;
    int threads = 0;  // 0 = hardware concurrency
};

/// One sweep cell result. `failed` marks cells whose generation or
/// verification errored; such rows keep their identifying columns and leave
/// the measured ones empty in CSV output.
struct SweepRecord {
    GenModel model{};
    NodeId n = 0;
    double k_target = 0.0;
    double k_actual = 0.0;
    int rep = 0;
    std::uint64_t seed = 0;
    int nu = 0;
    double n_d = 0.0;
    double i_d = 0.0;
    double cc_input_max_frac = 0.0;
    double cc_redundant_max_frac = 0.0;
    ControlMode mode_before{};
    double p_removed = 0.0;
    double delta_nd = 0.0;
    TargetMode flip_direction{};
    bool failed = false;
    std::string error;
};

/// Run the full sweep: for every (k, rep) cell, generate a graph from a
/// per-cell seed derived from params.seed, classify it, run the alteration
/// for the resolved direction and verify it. Cells run in parallel; the
/// returned rows are always ordered by (k, rep), so output is deterministic
/// for a fixed seed regardless of scheduling.
std::vector<SweepRecord> run_sweep(const SweepParams& params);

/// Schema-versioned CSV ("# ctrlmode-sweep v1"). Rows are self-contained,
/// so shards produced with include_header=false concatenate cleanly.
std::string sweep_csv(std::span<const SweepRecord> records, bool include_header = true);

const char* to_string(GenModel m);

}  // namespace ctrlmode
