#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anime/feature.hpp"

namespace anime {

// A group of paths under one representative intent. The representative is the
// running pairwise-join approximation of the exact join of the members.
struct Cluster {
    uint64_t id = 0;
    std::vector<size_t> members;  // distinct-path indices
    Label representative;
    double rep_cost = 0.0;
};

// Cost increase caused by merging two clusters, with the joined label cached.
// Entries referring to dead cluster ids are stale and skipped on pop.
struct MergeCandidate {
    uint64_t cluster_a = 0;
    uint64_t cluster_b = 0;
    double distance = 0.0;
    Label joined;
};

struct InferenceConfig {
    size_t k = 1;                  // max intents
    size_t b = 0;                  // sampled partners per cluster event; 0 = unlimited
    uint64_t seed = 0;
    bool merge_nonpositive = true; // keep merging below k while it costs nothing
    bool keep_trace = false;
};

struct MergeRecord {
    size_t step = 0;
    uint64_t merged_a = 0;
    uint64_t merged_b = 0;
    uint64_t into = 0;
    double distance = 0.0;
    Label representative;
    size_t live_after = 0;
};

struct InferenceStats {
    uint64_t queue_pushes = 0;
    uint64_t queue_pops = 0;
    uint64_t join_calls = 0;
    uint64_t resample_rounds = 0;
};

struct InferenceResult {
    IntentSet intents;
    std::vector<size_t> assignments;  // input path index -> intent index
    double total_cost = 0.0;
    std::vector<MergeRecord> trace;
    InferenceStats stats;
};

// Agglomerative inference: one cluster per distinct path, then greedy merges of
// the cheapest sampled candidate until at most k clusters remain (and, with
// merge_nonpositive, no free merge is left). Deterministic for a fixed config.
InferenceResult infer(std::span<const Path> paths, const Feature& feature,
                      const InferenceConfig& config);

// d(a, b) = cost(join(reps)) - (rep_cost_a + rep_cost_b).
MergeCandidate cluster_distance(const Cluster& a, const Cluster& b, const Feature& feature);

// Minimal-cost single intent covering all paths (k = 1 specialization).
Intent single_intent(std::span<const Path> paths, const Feature& feature);

}  // namespace anime
