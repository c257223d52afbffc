#pragma once

#include <memory>
#include <string>
#include <vector>

#include "anime/feature.hpp"

namespace anime {

// Cartesian product of named component features. Order, join, and concreteness
// are componentwise; cost is the product of component costs.
class TupleFeature : public Feature {
public:
    struct Component {
        std::string name;
        std::shared_ptr<const Feature> feature;
    };

    TupleFeature(std::string name, std::vector<Component> components);

    Label label(std::vector<Label> parts) const;
    const std::vector<Component>& components() const { return components_; }
    size_t arity() const { return components_.size(); }

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
    const TupleValue& value_of(const Label& l) const;
    std::optional<std::vector<Label>> product(
        const std::vector<std::vector<Label>>& per_component, uint64_t cap) const;

    std::vector<Component> components_;
};

}  // namespace anime
