#include "ctrlmode/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "ctrlmode/errors.hpp"
#include "ctrlmode/matching.hpp"

namespace ctrlmode {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t k_index, int rep) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(k_index) + 1));
    h = splitmix64(h ^ (static_cast<std::uint64_t>(rep) + 1));
    return h;
}

void append_fixed(std::string& out, double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    out += buf;
}

SweepRecord run_cell(const SweepParams& params, double k, std::size_t k_index, int rep) {
    SweepRecord rec;
    rec.model = params.model;
    rec.n = params.n;
    rec.k_target = k;
    rec.rep = rep;
    rec.seed = cell_seed(params.seed, k_index, rep);
    try {
        GenParams gp;
        gp.n = params.n;
        gp.k_avg = k;
        gp.gamma_in = params.gamma_in;
        gp.gamma_out = params.gamma_out;
        gp.seed = rec.seed;
        gp.model = params.model;
        const DiGraph g = generate(gp);
        rec.k_actual = g.average_degree();

        const Matching m = maximum_matching(g);
        const Classification c = classify(g, m);
        const ControlComponents comps = components(g, m, c);
        rec.nu = m.nu();
        rec.n_d = c.n_d;
        rec.i_d = c.i_d;
        const double n = static_cast<double>(g.node_count());
        rec.cc_input_max_frac =
            comps.largest_input >= 0
                ? static_cast<double>(
                      comps.components[static_cast<std::size_t>(comps.largest_input)].size()) / n
                : 0.0;
        rec.cc_redundant_max_frac =
            comps.largest_redundant >= 0
                ? static_cast<double>(
                      comps.components[static_cast<std::size_t>(comps.largest_redundant)].size()) / n
                : 0.0;
        rec.mode_before = control_mode(c);

        switch (params.direction) {
            case SweepDirection::centralized:
                rec.flip_direction = TargetMode::centralized;
                break;
            case SweepDirection::distributed:
                rec.flip_direction = TargetMode::distributed;
                break;
            case SweepDirection::opposing:
                rec.flip_direction = rec.mode_before == ControlMode::distributed
                                         ? TargetMode::centralized
                                         : TargetMode::distributed;
                break;
        }
        const RemovalPlan plan = rec.flip_direction == TargetMode::centralized
                                     ? to_centralized(g)
                                     : to_distributed(g);
        const AlterReport rep = apply_and_verify(g, plan);
        rec.p_removed = rep.p;
        rec.delta_nd = rep.delta_nd;
    } catch (const Error& e) {
        rec.failed = true;
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepParams& params) {
    if (params.reps < 1) throw Error("sweep: reps must be at least 1");
    if (!(params.k_step > 0.0)) throw Error("sweep: k_step must be positive");
    if (params.k_max < params.k_min) throw Error("sweep: k_max must be >= k_min");

    const auto k_count = static_cast<std::size_t>(
        std::floor((params.k_max - params.k_min) / params.k_step + 1e-9)) + 1;
    const std::size_t cells = k_count * static_cast<std::size_t>(params.reps);
    std::vector<SweepRecord> records(cells);

    unsigned thread_count = params.threads > 0
                                ? static_cast<unsigned>(params.threads)
                                : std::max(1u, std::thread::hardware_concurrency());
    thread_count = static_cast<unsigned>(
        std::min<std::size_t>(thread_count, std::max<std::size_t>(cells, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells) break;
            const std::size_t k_index = idx / static_cast<std::size_t>(params.reps);
            const int rep = static_cast<int>(idx % static_cast<std::size_t>(params.reps));
            const double k = params.k_min + static_cast<double>(k_index) * params.k_step;
            records[idx] = run_cell(params, k, k_index, rep);
        }
    };
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) th.join();
    }
    return records;  // already ordered by (k, rep)
}

std::string sweep_csv(std::span<const SweepRecord> records, bool include_header) {
    std::string out;
    if (include_header) {
        out += "# ctrlmode-sweep v1\n";
        out += "model,n,k_target,k_actual,rep,seed,nu,n_d,i_d,cc_input_max_frac,"
               "cc_redundant_max_frac,mode_before,p_removed,delta_nd,flip_direction\n";
    }
    for (const SweepRecord& r : records) {
        out += to_string(r.model);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        append_fixed(out, r.k_target);
        out += ',';
        if (r.failed) {
            out += ',';  // k_actual unknown
            out += std::to_string(r.rep);
            out += ',';
            out += std::to_string(r.seed);
            out += ",,,,,,,,,error\n";
            std::string msg = r.error;
            for (char& c : msg) {
                if (c == '\n' || c == '\r') c = ' ';
            }
            out += "# error (k=";
            append_fixed(out, r.k_target);
            out += ", rep=" + std::to_string(r.rep) + "): " + msg + '\n';
            continue;
        }
        append_fixed(out, r.k_actual);
        out += ',';
        out += std::to_string(r.rep);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.nu);
        out += ',';
        append_fixed(out, r.n_d);
        out += ',';
        append_fixed(out, r.i_d);
        out += ',';
        append_fixed(out, r.cc_input_max_frac);
        out += ',';
        append_fixed(out, r.cc_redundant_max_frac);
        out += ',';
        out += to_string(r.mode_before);
        out += ',';
        append_fixed(out, r.p_removed);
        out += ',';
        append_fixed(out, r.delta_nd);
        out += ',';
        out += r.flip_direction == TargetMode::centralized ? "to_centralized"
                                                           : "to_distributed";
        out += '\n';
    }
    return out;
}

const char* to_string(GenModel m) { return m == GenModel::sf ? "sf" : "er"; }

}  // namespace ctrlmode
