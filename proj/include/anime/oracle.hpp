#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anime/feature.hpp"

namespace anime::oracle {

// Limits for the brute-force searches; they are test oracles, not solvers.
struct OracleBudget {
    uint64_t max_labels = 32;
    size_t max_paths = 10;
    size_t max_k = 4;
};

// Exhaustive minimal-cost intent set of size <= k representing all paths.
// Deterministic tie-break: the candidate set earliest in sorted label-key order.
IntentSet optimal_infer(std::span<const Path> paths, const Feature& feature, size_t k,
                        const OracleBudget& budget = {});

// Exact represented set by direct membership testing of every candidate. For
// HRE intents, candidates are all token strings of length <= d and membership
// uses the naive replace-with-ancestors check rather than the engine's DP.
std::vector<Label> enumerate_represented(const IntentSet& intents,
                                         const OracleBudget& budget = {});

// Naive acceptance: try every ancestor substitution of the tokens and match the
// result against the expression read as a plain regex (exact symbols, + only).
bool naive_hre_accepts(const Label& h, std::span<const Label> tokens);

}  // namespace anime::oracle
