#pragma once

#include <string>

#include "anime/feature.hpp"

namespace anime {

// Ternary bit vectors of a fixed width; wildcard positions stand for both bit
// values, so a label covers 2^(#wildcards) concrete vectors.
class TbvFeature : public Feature {
public:
    TbvFeature(std::string name, uint32_t width);

    uint32_t width() const { return width_; }
    Label label(const std::string& bits) const { return parse_text(bits); }

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
    const TbvValue& value_of(const Label& l) const;

    uint32_t width_;
};

}  // namespace anime
