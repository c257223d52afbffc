#pragma once

#include <cstdint>
#include <vector>

#include "anime/feature.hpp"

namespace anime {

// The ground-truth behavior set an intent set is scored against.
class ReferenceSet {
public:
    explicit ReferenceSet(std::vector<Path> paths);

    const std::vector<Path>& paths() const { return paths_; }
    size_t size() const { return paths_.size(); }
    const Feature* feature() const {
        return paths_.empty() ? nullptr : paths_.front().label().feature;
    }

private:
    std::vector<Path> paths_;
};

struct PerIntentStat {
    Label intent;
    uint64_t reference_covered = 0;  // reference paths below this intent
    double sigma_size = 0.0;
    bool sigma_exact = true;
};

struct EvalReport {
    uint64_t tp = 0;
    uint64_t fn_ = 0;
    double fp = 0.0;
    bool fp_exact = true;  // false when fp is an upper bound
    double precision = 1.0;
    double recall = 0.0;
    double f_score = 0.0;
    std::vector<PerIntentStat> per_intent;
};

inline constexpr uint64_t kDefaultEnumerationCap = 1'000'000;

// |union of sigma(i)|. Exact when enumerable (non-HRE) or countable by the union
// automaton (HRE) under `cap`; otherwise the flagged per-intent cost sum.
struct RepresentedSize {
    double value = 0.0;
    bool exact = true;
};
RepresentedSize represented_size(const IntentSet& intents,
                                 uint64_t cap = kDefaultEnumerationCap);

// TP/FN/FP, precision, recall, F-score of the intents against the reference.
EvalReport evaluate(const IntentSet& intents, const ReferenceSet& reference,
                    uint64_t cap = kDefaultEnumerationCap);

}  // namespace anime
