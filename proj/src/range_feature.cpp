#include "anime/range_feature.hpp"

#include <algorithm>

namespace anime {

RangeFeature::RangeFeature(std::string name, int64_t domain_lo, int64_t domain_hi)
    : Feature(std::move(name), FeatureKind::Range), domain_{domain_lo, domain_hi} {
    if (domain_lo > domain_hi)
        throw UsageError("range feature '" + this->name() + "' has an empty domain");
    constexpr int64_t kBound = int64_t{1} << 62;
    if (domain_lo < -kBound || domain_hi > kBound)
        throw UsageError("range domain bounds must stay within +/-2^62");
}

Label RangeFeature::label(int64_t lo, int64_t hi) const {
    if (lo > hi) throw UsageError("range label with lo > hi");
    if (lo < domain_.lo || hi > domain_.hi)
        throw UsageError("range label outside the domain of '" + name() + "'");
    return Label{this, RangeValue{lo, hi}};
}

const RangeValue& RangeFeature::value_of(const Label& l) const {
    require_mine(l);
    const RangeValue* v = std::get_if<RangeValue>(&l.value);
    if (v == nullptr || v->lo > v->hi || v->lo < domain_.lo || v->hi > domain_.hi)
        throw UsageError("malformed range label");
    return *v;
}

bool RangeFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const RangeValue* v = std::get_if<RangeValue>(&l.value);
    return v != nullptr && v->lo <= v->hi && v->lo >= domain_.lo && v->hi <= domain_.hi;
}

bool RangeFeature::is_concrete(const Label& l) const {
    const RangeValue& v = value_of(l);
    return v.lo == v.hi;
}

bool RangeFeature::leq(const Label& a, const Label& b) const {
    const RangeValue& va = value_of(a);
    const RangeValue& vb = value_of(b);
    return vb.lo <= va.lo && va.hi <= vb.hi;
}

double RangeFeature::cost(const Label& l) const {
    const RangeValue& v = value_of(l);
    return static_cast<double>(v.hi - v.lo) + 1.0;
}

Label RangeFeature::join(const Label& a, const Label& b) const {
    const RangeValue& va = value_of(a);
    const RangeValue& vb = value_of(b);
    return Label{this, RangeValue{std::min(va.lo, vb.lo), std::max(va.hi, vb.hi)}};
}

Label RangeFeature::top() const { return Label{this, domain_}; }

std::optional<std::vector<Label>> RangeFeature::sigma(const Label& l, uint64_t cap) const {
    const RangeValue& v = value_of(l);
    uint64_t n = static_cast<uint64_t>(v.hi - v.lo) + 1;
    if (n > cap) return std::nullopt;
    std::vector<Label> out;
    out.reserve(n);
    for (int64_t x = v.lo; x <= v.hi; ++x) out.push_back(Label{this, RangeValue{x, x}});
    return out;
}

std::optional<std::vector<Label>> RangeFeature::universe(uint64_t cap) const {
    uint64_t n = static_cast<uint64_t>(domain_.hi - domain_.lo) + 1;
    if (n > 100000 || n * (n + 1) / 2 > cap) return std::nullopt;
    std::vector<Label> out;
    for (int64_t lo = domain_.lo; lo <= domain_.hi; ++lo)
        for (int64_t hi = lo; hi <= domain_.hi; ++hi)
            out.push_back(Label{this, RangeValue{lo, hi}});
    return out;
}

std::string RangeFeature::print_text(const Label& l) const {
    const RangeValue& v = value_of(l);
    return std::to_string(v.lo) + ".." + std::to_string(v.hi);
}

Label RangeFeature::parse_text(const std::string& text) const {
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw UsageError("bad range literal '" + text + "'");
        size_t used = 0;
        int64_t v;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw UsageError("bad range literal '" + text + "'");
        }
        if (used != s.size()) throw UsageError("bad range literal '" + text + "'");
        return v;
    };
    auto sep = text.find("..");
    if (sep == std::string::npos) {
        int64_t v = parse_int(text);
        return label(v, v);
    }
    return label(parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2)));
}

}  // namespace anime
