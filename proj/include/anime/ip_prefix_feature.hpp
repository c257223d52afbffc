#pragma once

#include <string>

#include "anime/feature.hpp"

namespace anime {

// IPv4 prefixes: 32-bit ternary vectors whose wildcards are confined to the tail.
class IpPrefixFeature : public Feature {
public:
    explicit IpPrefixFeature(std::string name);

    Label label(uint32_t addr, uint8_t prefix_len) const;
    Label label(const std::string& cidr) const { return parse_text(cidr); }

    bool contains(const Label& l) const override;
    bool is_concrete(const Label& l) const override;
    bool leq(const Label& a, const Label& b) const override;
    double cost(const Label& l) const override;
    Label join(const Label& a, const Label& b) const override;
    Label top() const override;
    std::optional<std::vector<Label>> sigma(const Label& l, uint64_t cap) const override;
    std::optional<std::vector<Label>> universe(uint64_t cap) const override;
    std::string print_text(const Label& l) const override;
    Label parse_text(const std::string& text) const override;

private:
    const IpPrefixValue& value_of(const Label& l) const;
};

}  // namespace anime
