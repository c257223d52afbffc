#include "anime/ip_prefix_feature.hpp"

#include <bit>
#include <cmath>

namespace anime {

namespace {

// Mask of the top `len` bits; len == 0 gives 0.
inline uint32_t prefix_mask(uint8_t len) {
    return len == 0 ? 0u : static_cast<uint32_t>(~uint64_t{0} << (32 - len));
}

}  // namespace

IpPrefixFeature::IpPrefixFeature(std::string name)
    : Feature(std::move(name), FeatureKind::IpPrefix) {}

Label IpPrefixFeature::label(uint32_t addr, uint8_t prefix_len) const {
    if (prefix_len > 32) throw UsageError("prefix length out of range");
    if (addr & ~prefix_mask(prefix_len))
        throw UsageError("prefix address has non-zero bits past its length");
    return Label{this, IpPrefixValue{addr, prefix_len}};
}

const IpPrefixValue& IpPrefixFeature::value_of(const Label& l) const {
    require_mine(l);
    const IpPrefixValue* v = std::get_if<IpPrefixValue>(&l.value);
    if (v == nullptr || v->prefix_len > 32 || (v->addr & ~prefix_mask(v->prefix_len)))
        throw UsageError("malformed ip prefix label");
    return *v;
}

bool IpPrefixFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const IpPrefixValue* v = std::get_if<IpPrefixValue>(&l.value);
    return v != nullptr && v->prefix_len <= 32 && (v->addr & ~prefix_mask(v->prefix_len)) == 0;
}

bool IpPrefixFeature::is_concrete(const Label& l) const { return value_of(l).prefix_len == 32; }

bool IpPrefixFeature::leq(const Label& a, const Label& b) const {
    const IpPrefixValue& va = value_of(a);
    const IpPrefixValue& vb = value_of(b);
    if (va.prefix_len < vb.prefix_len) return false;
    return (va.addr & prefix_mask(vb.prefix_len)) == vb.addr;
}

double IpPrefixFeature::cost(const Label& l) const {
    return std::ldexp(1.0, 32 - value_of(l).prefix_len);
}

Label IpPrefixFeature::join(const Label& a, const Label& b) const {
    const IpPrefixValue& va = value_of(a);
    const IpPrefixValue& vb = value_of(b);
    uint32_t diff = va.addr ^ vb.addr;
    uint8_t common = diff == 0 ? 32 : static_cast<uint8_t>(std::countl_zero(diff));
    uint8_t len = std::min({va.prefix_len, vb.prefix_len, common});
    return Label{this, IpPrefixValue{va.addr & prefix_mask(len), len}};
}

Label IpPrefixFeature::top() const { return Label{this, IpPrefixValue{0, 0}}; }

std::optional<std::vector<Label>> IpPrefixFeature::sigma(const Label& l, uint64_t cap) const {
    const IpPrefixValue& v = value_of(l);
    uint64_t n = uint64_t{1} << (32 - v.prefix_len);
    if (n > cap) return std::nullopt;
    std::vector<Label> out;
    out.reserve(n);
    for (uint64_t i = 0; i < n; ++i)
        out.push_back(Label{this, IpPrefixValue{static_cast<uint32_t>(v.addr + i), 32}});
    return out;
}

std::optional<std::vector<Label>> IpPrefixFeature::universe(uint64_t cap) const {
    // 2^33 - 1 labels; far beyond any practical cap. Enumerated only if asked to.
    uint64_t total = 0;
    for (int len = 0; len <= 32; ++len) total += uint64_t{1} << len;
    if (total > cap) return std::nullopt;
    std::vector<Label> out;
    for (int len = 0; len <= 32; ++len)
        for (uint64_t p = 0; p < (uint64_t{1} << len); ++p)
            out.push_back(Label{this, IpPrefixValue{static_cast<uint32_t>(p << (32 - len)),
                                                    static_cast<uint8_t>(len)}});
    return out;
}

std::string IpPrefixFeature::print_text(const Label& l) const {
    const IpPrefixValue& v = value_of(l);
    std::string s = std::to_string((v.addr >> 24) & 0xff) + "." +
                    std::to_string((v.addr >> 16) & 0xff) + "." +
                    std::to_string((v.addr >> 8) & 0xff) + "." + std::to_string(v.addr & 0xff);
    return s + "/" + std::to_string(v.prefix_len);
}

Label IpPrefixFeature::parse_text(const std::string& text) const {
    std::string addr_part = text;
    uint32_t len = 32;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        addr_part = text.substr(0, slash);
        std::string len_part = text.substr(slash + 1);
        if (len_part.empty() || len_part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad prefix length in '" + text + "'");
        len = static_cast<uint32_t>(std::stoul(len_part));
        if (len > 32) throw UsageError("prefix length out of range in '" + text + "'");
    }
    uint32_t addr = 0;
    size_t pos = 0;
    for (int octet = 0; octet < 4; ++octet) {
        size_t end = addr_part.find('.', pos);
        std::string part = octet == 3 ? addr_part.substr(pos)
                                      : addr_part.substr(pos, end - pos);
        if ((octet < 3) != (end != std::string::npos) || part.empty() ||
            part.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad IPv4 address '" + addr_part + "'");
        unsigned long v = std::stoul(part);
        if (v > 255) throw UsageError("bad IPv4 octet in '" + addr_part + "'");
        addr = (addr << 8) | static_cast<uint32_t>(v);
        pos = end + 1;
    }
    if (addr & ~prefix_mask(static_cast<uint8_t>(len)))
        throw UsageError("prefix '" + text + "' has host bits set past its length");
    return Label{this, IpPrefixValue{addr, static_cast<uint8_t>(len)}};
}

}  // namespace anime
