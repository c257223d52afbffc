#include "anime/tuple_feature.hpp"

namespace anime {

TupleFeature::TupleFeature(std::string name, std::vector<Component> components)
    : Feature(std::move(name), FeatureKind::Tuple), components_(std::move(components)) {
    if (components_.empty())
        throw UsageError("tuple feature '" + this->name() + "' needs at least one component");
    for (size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].feature == nullptr)
            throw UsageError("tuple component without a feature");
        if (components_[i].name.empty())
            throw UsageError("tuple component without a name");
        for (size_t j = 0; j < i; ++j)
            if (components_[j].name == components_[i].name)
                throw UsageError("duplicate tuple component name '" + components_[i].name + "'");
    }
}

Label TupleFeature::label(std::vector<Label> parts) const {
    if (parts.size() != components_.size())
        throw UsageError("tuple label arity mismatch for feature '" + name() + "'");
    for (size_t i = 0; i < parts.size(); ++i)
        if (!components_[i].feature->contains(parts[i]))
            throw UsageError("tuple component '" + components_[i].name +
                             "' rejects the given label");
    return Label{this, TupleValue{std::move(parts)}};
}

const TupleValue& TupleFeature::value_of(const Label& l) const {
    require_mine(l);
    const TupleValue* v = std::get_if<TupleValue>(&l.value);
    if (v == nullptr || v->parts.size() != components_.size())
        throw UsageError("malformed tuple label");
    return *v;
}

bool TupleFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const TupleValue* v = std::get_if<TupleValue>(&l.value);
    if (v == nullptr || v->parts.size() != components_.size()) return false;
    for (size_t i = 0; i < v->parts.size(); ++i)
        if (!components_[i].feature->contains(v->parts[i])) return false;
    return true;
}

bool TupleFeature::is_concrete(const Label& l) const {
    const TupleValue& v = value_of(l);
    for (size_t i = 0; i < v.parts.size(); ++i)
        if (!components_[i].feature->is_concrete(v.parts[i])) return false;
    return true;
}

bool TupleFeature::leq(const Label& a, const Label& b) const {
    const TupleValue& va = value_of(a);
    const TupleValue& vb = value_of(b);
    for (size_t i = 0; i < components_.size(); ++i)
        if (!components_[i].feature->leq(va.parts[i], vb.parts[i])) return false;
    return true;
}

double TupleFeature::cost(const Label& l) const {
    const TupleValue& v = value_of(l);
    double c = 1.0;
    for (size_t i = 0; i < components_.size(); ++i)
        c *= components_[i].feature->cost(v.parts[i]);
    return c;
}

Label TupleFeature::join(const Label& a, const Label& b) const {
    const TupleValue& va = value_of(a);
    const TupleValue& vb = value_of(b);
    TupleValue out;
    out.parts.reserve(components_.size());
    for (size_t i = 0; i < components_.size(); ++i)
        out.parts.push_back(components_[i].feature->join(va.parts[i], vb.parts[i]));
    return Label{this, std::move(out)};
}

Label TupleFeature::top() const {
    TupleValue v;
    v.parts.reserve(components_.size());
    for (const Component& c : components_) v.parts.push_back(c.feature->top());
    return Label{this, std::move(v)};
}

std::optional<std::vector<Label>> TupleFeature::product(
    const std::vector<std::vector<Label>>& per_component, uint64_t cap) const {
    uint64_t total = 1;
    for (const auto& options : per_component) {
        if (options.empty()) return std::vector<Label>{};
        if (total > cap / options.size()) return std::nullopt;
        total *= options.size();
    }
    std::vector<Label> out;
    out.reserve(total);
    std::vector<size_t> idx(per_component.size(), 0);
    while (true) {
        TupleValue v;
        v.parts.reserve(per_component.size());
        for (size_t i = 0; i < per_component.size(); ++i)
            v.parts.push_back(per_component[i][idx[i]]);
        out.push_back(Label{this, std::move(v)});
        size_t i = per_component.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per_component[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::optional<std::vector<Label>> TupleFeature::sigma(const Label& l, uint64_t cap) const {
    const TupleValue& v = value_of(l);
    std::vector<std::vector<Label>> per_component;
    per_component.reserve(components_.size());
    for (size_t i = 0; i < components_.size(); ++i) {
        auto s = components_[i].feature->sigma(v.parts[i], cap);
        if (!s) return std::nullopt;
        per_component.push_back(std::move(*s));
    }
    return product(per_component, cap);
}

std::optional<std::vector<Label>> TupleFeature::universe(uint64_t cap) const {
    std::vector<std::vector<Label>> per_component;
    per_component.reserve(components_.size());
    for (const Component& c : components_) {
        auto u = c.feature->universe(cap);
        if (!u) return std::nullopt;
        per_component.push_back(std::move(*u));
    }
    return product(per_component, cap);
}

std::string TupleFeature::print_text(const Label& l) const {
    value_of(l);
    throw UsageError("tuple labels have no plain text form; serialize them structurally");
}

Label TupleFeature::parse_text(const std::string& text) const {
    throw UsageError("tuple labels have no plain text form: '" + text + "'");
}

}  // namespace anime
