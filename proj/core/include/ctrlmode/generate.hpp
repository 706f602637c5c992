#pragma once

#include <cstdint>

#include "ctrlmode/digraph.hpp"

namespace ctrlmode {

/// Synthetic-network model: static-model scale-free (sf) or uniform random
/// (er).
enum class GenModel : std::uint8_t { sf, er };

/// Generation parameters. The degree convention is total degree:
/// <k> = 2L/n, so L = round(n * k_avg / 2) edges are produced.
struct GenParams {
    NodeId n = 0;
    double k_avg = 0.0;
    double gamma_in = 3.0;   // in-degree power-law exponent (sf only)
    double gamma_out = 3.0;  // out-degree power-law exponent (sf only)
    std::uint64_t seed = 0;
    GenModel model = GenModel::sf;
};

/// Generate a simple digraph (no self-loops, no duplicates) with exactly
/// round(n*k_avg/2) edges. Deterministic for a fixed seed.
///
/// sf: node i (1-indexed) carries out-weight i^(-a_out) and in-weight
/// i^(-a_in), a = 1/(gamma-1); edge endpoints are sampled proportionally to
/// the weights, rejecting self-loops and duplicates. er: uniform distinct
/// ordered pairs.
///
/// Throws Error when the edge count is infeasible for n, or when rejection
/// sampling exceeds 100*L attempts (dense heavy-tail corner cases are
/// reported, not silently mis-generated).
DiGraph generate(const GenParams& params);

}  // namespace ctrlmode
