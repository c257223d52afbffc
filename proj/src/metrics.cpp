#include "anime/metrics.hpp"

#include <unordered_set>

#include "anime/hre_feature.hpp"

namespace anime {

ReferenceSet::ReferenceSet(std::vector<Path> paths) : paths_(std::move(paths)) {
    for (const Path& p : paths_)
        if (p.label().feature != paths_.front().label().feature)
            throw UsageError("reference set mixes feature types");
}

RepresentedSize represented_size(const IntentSet& intents, uint64_t cap) {
    if (intents.empty()) return {0.0, true};
    const Feature& f = *intents.feature();

    if (f.kind() == FeatureKind::Hre) {
        std::vector<Label> hs;
        hs.reserve(intents.size());
        for (const Intent& i : intents.intents()) hs.push_back(i.label());
        SigmaCount c = hre_count(hs, cap);
        return {c.value, c.exact};
    }

    std::unordered_set<Label> rep;
    bool exact = true;
    for (const Intent& i : intents.intents()) {
        auto s = f.sigma(i.label(), cap);
        if (!s || rep.size() + s->size() > cap) {
            exact = false;
            break;
        }
        rep.insert(s->begin(), s->end());
        if (rep.size() > cap) {
            exact = false;
            break;
        }
    }
    if (exact) return {static_cast<double>(rep.size()), true};

    // Fall back to the cost sum; delta equals |sigma| per intent for these kinds,
    // so the sum over-counts only the overlaps.
    double sum = 0.0;
    for (const Intent& i : intents.intents()) sum += f.cost(i.label());
    return {sum, false};
}

EvalReport evaluate(const IntentSet& intents, const ReferenceSet& reference, uint64_t cap) {
    EvalReport r;
    r.fn_ = reference.size();
    if (intents.empty()) {
        // No represented paths, no false positives.
        r.precision = 1.0;
        r.recall = 0.0;
        r.f_score = 0.0;
        return r;
    }
    if (reference.feature() != nullptr && reference.feature() != intents.feature())
        throw UsageError("intents and reference use different feature types");

    r.per_intent.reserve(intents.size());
    for (const Intent& i : intents.intents()) {
        SigmaCount c = intents.feature()->sigma_count(i.label(), cap);
        r.per_intent.push_back(PerIntentStat{i.label(), 0, c.value, c.exact});
    }

    for (const Path& p : reference.paths()) {
        bool covered = false;
        for (size_t idx = 0; idx < intents.size(); ++idx) {
            if (leq(p.label(), intents.intents()[idx].label())) {
                covered = true;
                ++r.per_intent[idx].reference_covered;
            }
        }
        if (covered) ++r.tp;
    }
    r.fn_ = reference.size() - r.tp;

    RepresentedSize rep = represented_size(intents, cap);
    r.fp = rep.value - static_cast<double>(r.tp);
    if (r.fp < 0.0) r.fp = 0.0;
    r.fp_exact = rep.exact;

    double tp = static_cast<double>(r.tp);
    r.precision = (tp + r.fp) > 0.0 ? tp / (tp + r.fp) : 1.0;
    r.recall = reference.size() > 0 ? tp / static_cast<double>(reference.size()) : 1.0;
    r.f_score = (r.precision > 0.0 && r.recall > 0.0)
                    ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                    : 0.0;
    return r;
}

}  // namespace anime
