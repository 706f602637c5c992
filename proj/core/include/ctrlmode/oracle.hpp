#pragma once

#include <cstdint>
#include <vector>

#include "ctrlmode/digraph.hpp"

namespace ctrlmode {

/// Exhaustive ground truth for tiny graphs.
struct OracleResult {
    int nu = 0;                       // matching number
    std::uint64_t count = 0;          // number of distinct maximum matchings (>= 1)
    std::vector<bool> ever_unmatched; // per node: - copy unmatched in >= 1 maximum matching
};

inline constexpr NodeId kOracleNodeLimit = 12;

/// Enumerate every matching of the bipartite split by backtracking and
/// record the matching number, how many matchings attain it, and which
/// nodes are unmatched on their - copy in at least one of them. A node is
/// an input node exactly when its flag is set, independently of the
/// alternating-path machinery this result is used to check.
///
/// Refuses graphs with more than kOracleNodeLimit nodes (exponential blowup).
OracleResult enumerate_matchings(const DiGraph& g);

}  // namespace ctrlmode
