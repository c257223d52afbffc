#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

namespace anime {

class Feature;
struct Label;

// One position of a ternary bit vector.
enum class Trit : uint8_t { Zero = 0, One = 1, Wild = 2 };

struct TbvValue {
    std::vector<Trit> bits;
    auto operator<=>(const TbvValue&) const = default;
};

// Prefix address is kept in host byte order with all bits below the prefix zeroed.
struct IpPrefixValue {
    uint32_t addr = 0;
    uint8_t prefix_len = 0;
    auto operator<=>(const IpPrefixValue&) const = default;
};

struct RangeValue {
    int64_t lo = 0;
    int64_t hi = 0;
    auto operator<=>(const RangeValue&) const = default;
};

struct TupleValue {
    std::vector<Label> parts;
    bool operator==(const TupleValue& o) const;
    bool operator<(const TupleValue& o) const;
};

struct HreElement;

struct HreValue {
    std::vector<HreElement> elements;
    bool operator==(const HreValue& o) const;
    bool operator<(const HreValue& o) const;
};

// A label is a node of its feature's universe. The variant alternative in use is
// fixed by the feature kind; dag/flat labels are indices into the feature's node
// table, the remaining kinds carry their value inline.
struct Label {
    const Feature* feature = nullptr;
    std::variant<uint32_t, TbvValue, IpPrefixValue, RangeValue, TupleValue, HreValue> value;
};

struct HreElement {
    Label label;
    bool plus = false;
    bool operator==(const HreElement& o) const;
    bool operator<(const HreElement& o) const;
};

// Equality: same owning feature and same key.
bool operator==(const Label& a, const Label& b);
inline bool operator!=(const Label& a, const Label& b) { return !(a == b); }

// Key order. Total within one feature; used wherever a deterministic ordering of
// labels is required (join_all folds, tie-breaking, canonical output order).
bool operator<(const Label& a, const Label& b);

size_t hash_value(const Label& l);

}  // namespace anime

template <>
struct std::hash<anime::Label> {
    size_t operator()(const anime::Label& l) const { return anime::hash_value(l); }
};
