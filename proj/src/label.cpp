#include "anime/label.hpp"

#include <algorithm>

namespace anime {

bool TupleValue::operator==(const TupleValue& o) const { return parts == o.parts; }

bool TupleValue::operator<(const TupleValue& o) const {
    return std::lexicographical_compare(parts.begin(), parts.end(), o.parts.begin(),
                                        o.parts.end());
}

bool HreValue::operator==(const HreValue& o) const { return elements == o.elements; }

bool HreValue::operator<(const HreValue& o) const {
    return std::lexicographical_compare(elements.begin(), elements.end(), o.elements.begin(),
                                        o.elements.end());
}

bool HreElement::operator==(const HreElement& o) const {
    return plus == o.plus && label == o.label;
}

bool HreElement::operator<(const HreElement& o) const {
    if (label < o.label) return true;
    if (o.label < label) return false;
    return plus < o.plus;
}

bool operator==(const Label& a, const Label& b) {
    return a.feature == b.feature && a.value == b.value;
}

bool operator<(const Label& a, const Label& b) {
    if (a.feature != b.feature) return a.feature < b.feature;
    return a.value < b.value;
}

namespace {

inline size_t mix(size_t seed, size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct ValueHasher {
    size_t operator()(uint32_t v) const { return std::hash<uint32_t>{}(v); }
    size_t operator()(const TbvValue& v) const {
        size_t h = 0x7b;
        for (Trit t : v.bits) h = mix(h, static_cast<size_t>(t));
        return h;
    }
    size_t operator()(const IpPrefixValue& v) const {
        return mix(std::hash<uint32_t>{}(v.addr), v.prefix_len);
    }
    size_t operator()(const RangeValue& v) const {
        return mix(std::hash<int64_t>{}(v.lo), std::hash<int64_t>{}(v.hi));
    }
    size_t operator()(const TupleValue& v) const {
        size_t h = 0x70;
        for (const Label& p : v.parts) h = mix(h, hash_value(p));
        return h;
    }
    size_t operator()(const HreValue& v) const {
        size_t h = 0x48;
        for (const HreElement& e : v.elements) h = mix(mix(h, hash_value(e.label)), e.plus);
        return h;
    }
};

}  // namespace

size_t hash_value(const Label& l) {
    size_t h = std::hash<const void*>{}(static_cast<const void*>(l.feature));
    h = mix(h, l.value.index());
    return mix(h, std::visit(ValueHasher{}, l.value));
}

}  // namespace anime
