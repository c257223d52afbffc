#include "anime/tbv_feature.hpp"

#include <cmath>

namespace anime {

namespace {
constexpr uint32_t kMaxWidth = 512;

uint32_t wildcard_count(const TbvValue& v) {
    uint32_t n = 0;
    for (Trit t : v.bits) n += (t == Trit::Wild);
    return n;
}
}  // namespace

TbvFeature::TbvFeature(std::string name, uint32_t width)
    : Feature(std::move(name), FeatureKind::Tbv), width_(width) {
    if (width_ == 0 || width_ > kMaxWidth)
        throw UsageError("tbv width must be in [1, " + std::to_string(kMaxWidth) + "]");
}

const TbvValue& TbvFeature::value_of(const Label& l) const {
    require_mine(l);
    const TbvValue* v = std::get_if<TbvValue>(&l.value);
    if (v == nullptr || v->bits.size() != width_)
        throw UsageError("malformed tbv label (width mismatch)");
    return *v;
}

bool TbvFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const TbvValue* v = std::get_if<TbvValue>(&l.value);
    return v != nullptr && v->bits.size() == width_;
}

bool TbvFeature::is_concrete(const Label& l) const { return wildcard_count(value_of(l)) == 0; }

bool TbvFeature::leq(const Label& a, const Label& b) const {
    const TbvValue& va = value_of(a);
    const TbvValue& vb = value_of(b);
    for (uint32_t i = 0; i < width_; ++i) {
        if (vb.bits[i] == Trit::Wild) continue;
        if (va.bits[i] != vb.bits[i]) return false;
    }
    return true;
}

double TbvFeature::cost(const Label& l) const {
    return std::ldexp(1.0, static_cast<int>(wildcard_count(value_of(l))));
}

Label TbvFeature::join(const Label& a, const Label& b) const {
    const TbvValue& va = value_of(a);
    const TbvValue& vb = value_of(b);
    TbvValue out;
    out.bits.resize(width_);
    for (uint32_t i = 0; i < width_; ++i)
        out.bits[i] = va.bits[i] == vb.bits[i] ? va.bits[i] : Trit::Wild;
    return Label{this, std::move(out)};
}

Label TbvFeature::top() const {
    TbvValue v;
    v.bits.assign(width_, Trit::Wild);
    return Label{this, std::move(v)};
}

std::optional<std::vector<Label>> TbvFeature::sigma(const Label& l, uint64_t cap) const {
    const TbvValue& v = value_of(l);
    uint32_t wild = wildcard_count(v);
    if (wild >= 63 || (uint64_t{1} << wild) > cap) return std::nullopt;
    std::vector<uint32_t> slots;
    for (uint32_t i = 0; i < width_; ++i)
        if (v.bits[i] == Trit::Wild) slots.push_back(i);
    std::vector<Label> out;
    out.reserve(uint64_t{1} << wild);
    for (uint64_t fill = 0; fill < (uint64_t{1} << wild); ++fill) {
        TbvValue c = v;
        for (uint32_t s = 0; s < slots.size(); ++s)
            c.bits[slots[s]] = ((fill >> s) & 1) ? Trit::One : Trit::Zero;
        out.push_back(Label{this, std::move(c)});
    }
    return out;
}

std::optional<std::vector<Label>> TbvFeature::universe(uint64_t cap) const {
    double total = std::pow(3.0, width_);
    if (width_ > 32 || total > static_cast<double>(cap)) return std::nullopt;
    std::vector<Label> out;
    out.reserve(static_cast<size_t>(total));
    TbvValue v;
    v.bits.assign(width_, Trit::Zero);
    while (true) {
        out.push_back(Label{this, v});
        uint32_t i = 0;
        for (; i < width_; ++i) {
            if (v.bits[i] == Trit::Zero) {
                v.bits[i] = Trit::One;
                break;
            }
            if (v.bits[i] == Trit::One) {
                v.bits[i] = Trit::Wild;
                break;
            }
            v.bits[i] = Trit::Zero;
        }
        if (i == width_) break;
    }
    return out;
}

std::string TbvFeature::print_text(const Label& l) const {
    const TbvValue& v = value_of(l);
    std::string s;
    s.reserve(width_);
    for (Trit t : v.bits) s += t == Trit::Zero ? '0' : (t == Trit::One ? '1' : 'x');
    return s;
}

Label TbvFeature::parse_text(const std::string& text) const {
    if (text.size() != width_)
        throw UsageError("tbv literal '" + text + "' does not match width " +
                         std::to_string(width_));
    TbvValue v;
    v.bits.reserve(width_);
    for (char c : text) {
        switch (c) {
            case '0': v.bits.push_back(Trit::Zero); break;
            case '1': v.bits.push_back(Trit::One); break;
            case 'x':
            case 'X':
            case '*': v.bits.push_back(Trit::Wild); break;
            default: throw UsageError("tbv literal may only contain 0, 1, x");
        }
    }
    return Label{this, std::move(v)};
}

}  // namespace anime
