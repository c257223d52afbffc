#include "anime/feature.hpp"

#include <algorithm>

namespace anime {

const char* to_string(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::Dag: return "dag";
        case FeatureKind::Flat: return "flat";
        case FeatureKind::Tbv: return "tbv";
        case FeatureKind::IpPrefix: return "ipprefix";
        case FeatureKind::Range: return "range";
        case FeatureKind::Tuple: return "tuple";
        case FeatureKind::Hre: return "hre";
    }
    return "?";
}

namespace {

const Feature& feature_of(const Label& l) {
    if (l.feature == nullptr) throw UsageError("label has no owning feature");
    return *l.feature;
}

void require_same_feature(const Label& a, const Label& b) {
    if (a.feature != b.feature)
        throw UsageError("labels belong to different feature types");
}

}  // namespace

bool leq(const Label& a, const Label& b) {
    require_same_feature(a, b);
    return feature_of(a).leq(a, b);
}

double cost(const Label& l) { return feature_of(l).cost(l); }

Label join(const Label& a, const Label& b) {
    require_same_feature(a, b);
    return feature_of(a).join(a, b);
}

Label join_all(std::span<const Label> labels) {
    if (labels.empty()) throw UsageError("join_all requires a non-empty input");
    std::vector<Label> sorted(labels.begin(), labels.end());
    for (const Label& l : sorted) require_same_feature(sorted.front(), l);
    std::sort(sorted.begin(), sorted.end());
    Label acc = sorted.front();
    for (size_t i = 1; i < sorted.size(); ++i) acc = join(acc, sorted[i]);
    return acc;
}

std::optional<std::vector<Label>> sigma(const Label& l, uint64_t cap) {
    return feature_of(l).sigma(l, cap);
}

Path::Path(Label label) : label_(std::move(label)) {
    const Feature& f = feature_of(label_);
    if (!f.contains(label_)) throw UsageError("path label is not a member of its feature");
    if (!f.is_concrete(label_))
        throw UsageError("path label must be concrete in feature '" + f.name() + "'");
}

Intent::Intent(Label label) : label_(std::move(label)) {
    const Feature& f = feature_of(label_);
    if (!f.contains(label_)) throw UsageError("intent label is not a member of its feature");
}

IntentSet::IntentSet(std::vector<Intent> intents, size_t k_limit)
    : intents_(std::move(intents)), k_limit_(k_limit) {
    if (k_limit_ == 0) throw UsageError("intent set limit k must be positive");
    if (intents_.size() > k_limit_)
        throw UsageError("intent set exceeds its k limit");
    for (const Intent& i : intents_)
        if (i.label().feature != intents_.front().label().feature)
            throw UsageError("intent set mixes feature types");
}

bool represents(const IntentSet& intents, const Path& p) {
    for (const Intent& i : intents.intents()) {
        if (i.label().feature != p.label().feature)
            throw UsageError("intents and path belong to different feature types");
        if (leq(p.label(), i.label())) return true;
    }
    return false;
}

}  // namespace anime
