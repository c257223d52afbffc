#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "anime/feature.hpp"

namespace anime {

// Two-level universe: a synthetic Any above a finite set of concrete values.
// Labels are indices; values.size() is the Any slot.
class FlatFeature : public Feature {
public:
    FlatFeature(std::string name, std::vector<std::string> values);

    Label label(const std::string& value) const;
    Label any_label() const { return top(); }
    size_t value_count() const { return values_.size(); }
    const std::vector<std::string>& values() const { return values_; }

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
    uint32_t index_of_label(const Label& l) const;

    std::vector<std::string> values_;
    std::unordered_map<std::string, uint32_t> by_value_;
};

}  // namespace anime
