#include "ctrlmode/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "ctrlmode/errors.hpp"

namespace ctrlmode {

namespace {

// 53-bit uniform in [0, 1); all sampling goes through this so results are
// reproducible for a fixed seed.
double next_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF sample from a cumulative weight array.
NodeId sample_weighted(const std::vector<double>& cum, std::mt19937_64& rng) {
    const double x = next_u01(rng) * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), x);
    if (it == cum.end()) --it;
    return static_cast<NodeId>(it - cum.begin());
}

NodeId sample_uniform(NodeId n, std::mt19937_64& rng) {
    return static_cast<NodeId>(next_u01(rng) * static_cast<double>(n));
}

}  // namespace

DiGraph generate(const GenParams& p) {
    if (p.n < 1) {
        throw Error("generator: n must be at least 1");
    }
    if (!(p.k_avg > 0.0)) {
        throw Error("generator: k_avg must be positive");
    }
    if (p.model == GenModel::sf && (!(p.gamma_in > 2.0) || !(p.gamma_out > 2.0))) {
        throw Error("generator: power-law exponents must exceed 2");
    }
    const auto max_edges =
        static_cast<std::int64_t>(p.n) * (static_cast<std::int64_t>(p.n) - 1);
    const std::int64_t target = std::llround(static_cast<double>(p.n) * p.k_avg / 2.0);
    if (target > max_edges) {
        throw Error("generator: round(n*k_avg/2) = " + std::to_string(target) +
                    " edges is infeasible for n = " + std::to_string(p.n));
    }

    std::mt19937_64 rng(p.seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(target));
    std::unordered_set<std::uint64_t> present;
    present.reserve(static_cast<std::size_t>(target) * 2);
    auto key = [n = static_cast<std::uint64_t>(p.n)](NodeId a, NodeId b) {
        return static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b);
    };
    const std::uint64_t max_attempts =
        100ull * static_cast<std::uint64_t>(std::max<std::int64_t>(target, 1));
    std::uint64_t attempts = 0;

    std::vector<double> cum_out, cum_in;
    if (p.model == GenModel::sf) {
        const double a_out = 1.0 / (p.gamma_out - 1.0);
        const double a_in = 1.0 / (p.gamma_in - 1.0);
        cum_out.resize(static_cast<std::size_t>(p.n));
        cum_in.resize(static_cast<std::size_t>(p.n));
        double so = 0.0, si = 0.0;
        for (NodeId i = 0; i < p.n; ++i) {
            so += std::pow(static_cast<double>(i) + 1.0, -a_out);
            si += std::pow(static_cast<double>(i) + 1.0, -a_in);
            cum_out[static_cast<std::size_t>(i)] = so;
            cum_in[static_cast<std::size_t>(i)] = si;
        }
    }

    while (static_cast<std::int64_t>(edges.size()) < target) {
        if (++attempts > max_attempts) {
            throw Error("generator: rejection sampling stalled after " +
                        std::to_string(max_attempts) +
                        " attempts (requested density too high for the model)");
        }
        NodeId s, t;
        if (p.model == GenModel::sf) {
            s = sample_weighted(cum_out, rng);
            t = sample_weighted(cum_in, rng);
        } else {
            s = sample_uniform(p.n, rng);
            t = sample_uniform(p.n, rng);
        }
        if (s == t) continue;
        if (!present.insert(key(s, t)).second) continue;
        edges.push_back({s, t});
    }
    return DiGraph(p.n, std::move(edges));
}

}  // namespace ctrlmode
