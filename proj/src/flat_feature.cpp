#include "anime/flat_feature.hpp"

namespace anime {

FlatFeature::FlatFeature(std::string name, std::vector<std::string> values)
    : Feature(std::move(name), FeatureKind::Flat), values_(std::move(values)) {
    if (values_.empty())
        throw UsageError("flat feature '" + this->name() + "' needs at least one value");
    for (uint32_t i = 0; i < values_.size(); ++i) {
        if (values_[i].empty() || values_[i] == "*")
            throw UsageError("flat feature value may not be empty or '*'");
        if (!by_value_.emplace(values_[i], i).second)
            throw UsageError("duplicate flat feature value '" + values_[i] + "'");
    }
}

Label FlatFeature::label(const std::string& value) const {
    auto it = by_value_.find(value);
    if (it == by_value_.end())
        throw UsageError("unknown value '" + value + "' in feature '" + name() + "'");
    return Label{this, it->second};
}

uint32_t FlatFeature::index_of_label(const Label& l) const {
    require_mine(l);
    const uint32_t* idx = std::get_if<uint32_t>(&l.value);
    if (idx == nullptr || *idx > values_.size()) throw UsageError("malformed flat label");
    return *idx;
}

bool FlatFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const uint32_t* idx = std::get_if<uint32_t>(&l.value);
    return idx != nullptr && *idx <= values_.size();
}

bool FlatFeature::is_concrete(const Label& l) const {
    return index_of_label(l) < values_.size();
}

bool FlatFeature::leq(const Label& a, const Label& b) const {
    uint32_t ia = index_of_label(a), ib = index_of_label(b);
    return ia == ib || ib == values_.size();
}

double FlatFeature::cost(const Label& l) const {
    return index_of_label(l) == values_.size() ? static_cast<double>(values_.size()) : 1.0;
}

Label FlatFeature::join(const Label& a, const Label& b) const {
    uint32_t ia = index_of_label(a), ib = index_of_label(b);
    if (ia == ib) return a;
    if (ia == values_.size() || ib == values_.size()) return top();
    return top();
}

Label FlatFeature::top() const { return Label{this, static_cast<uint32_t>(values_.size())}; }

std::optional<std::vector<Label>> FlatFeature::sigma(const Label& l, uint64_t cap) const {
    uint32_t idx = index_of_label(l);
    if (idx < values_.size()) {
        if (cap < 1) return std::nullopt;
        return std::vector<Label>{l};
    }
    if (values_.size() > cap) return std::nullopt;
    std::vector<Label> out;
    out.reserve(values_.size());
    for (uint32_t i = 0; i < values_.size(); ++i) out.push_back(Label{this, i});
    return out;
}

std::optional<std::vector<Label>> FlatFeature::universe(uint64_t cap) const {
    if (values_.size() + 1 > cap) return std::nullopt;
    std::vector<Label> out;
    out.reserve(values_.size() + 1);
    for (uint32_t i = 0; i <= values_.size(); ++i) out.push_back(Label{this, i});
    return out;
}

std::string FlatFeature::print_text(const Label& l) const {
    uint32_t idx = index_of_label(l);
    return idx == values_.size() ? "*" : values_[idx];
}

Label FlatFeature::parse_text(const std::string& text) const {
    if (text == "*") return top();
    return label(text);
}

}  // namespace anime
