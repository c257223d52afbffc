#pragma once

#include <string>

#include "anime/feature.hpp"

namespace anime {

// Closed integer intervals within a declared domain. The domain itself is the
// greatest element, so joins stay total without an unbounded Any.
class RangeFeature : public Feature {
public:
    RangeFeature(std::string name, int64_t domain_lo, int64_t domain_hi);

    Label label(int64_t lo, int64_t hi) const;
    int64_t domain_lo() const { return domain_.lo; }
    int64_t domain_hi() const { return domain_.hi; }

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
    const RangeValue& value_of(const Label& l) const;

    RangeValue domain_;
};

}  // namespace anime
