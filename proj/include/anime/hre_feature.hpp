#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anime/feature.hpp"

namespace anime {

// Cost of an HRE: the geometric mean of its element-label costs, reported with
// its d-th power, which is the label cost used everywhere else.
struct HreCost {
    double geo_mean = 1.0;
    uint32_t exponent = 1;
    double value = 1.0;
};

// Reduced regular expressions over a hierarchical alphabet: a concatenation of
// base labels, each optionally marked `plus` (one or more repetitions). A string
// of concrete base labels is represented when every token matches (is below) the
// element it is assigned to. Labels of this feature are the expressions; their
// sigma-sets are the represented strings of length <= d.
class HreFeature : public Feature {
public:
    HreFeature(std::string name, std::shared_ptr<const Feature> base, uint32_t d);

    const Feature& base() const { return *base_; }
    std::shared_ptr<const Feature> base_ptr() const { return base_; }
    uint32_t bound() const { return d_; }

    // Builds an expression label; validates element labels and 1 <= size <= d.
    Label expression(std::vector<HreElement> elements) const;
    // Concrete string: every token a concrete base label, no plus marks.
    Label string_label(std::span<const Label> tokens) const;

    // Generalized acceptance for a token string (all tokens concrete in base).
    bool accepts(const Label& h, std::span<const Label> tokens) const;
    HreCost expression_cost(const Label& h) const;

    // Number of distinct strings represented by at least one input expression.
    // Falls back to the per-expression sum (an upper bound, exact=false) when the
    // union-automaton memo outgrows `cap`.
    SigmaCount count_union(std::span<const Label> hs, uint64_t cap) const;

    const std::vector<HreElement>& elements_of(const Label& l) const;

    bool contains(const Label& l) const override;
    bool is_concrete(const Label& l) const override;
    bool leq(const Label& a, const Label& b) const override;
    double cost(const Label& l) const override;
    Label join(const Label& a, const Label& b) const override;
    Label top() const override;
    std::optional<std::vector<Label>> sigma(const Label& l, uint64_t cap) const override;
    SigmaCount sigma_count(const Label& l, uint64_t cap) const override;
    std::string print_text(const Label& l) const override;
    Label parse_text(const std::string& text) const override;

private:
    const std::vector<Label>& alphabet() const;

    std::shared_ptr<const Feature> base_;
    uint32_t d_;
    std::vector<Label> alphabet_;  // concrete base labels; empty if base overflowed
    bool alphabet_ok_ = false;
};

// Free forms of the engine operations; each label must come from an HreFeature.
bool hre_accepts(const Label& h, std::span<const Label> tokens);
bool hre_accepts(const Label& h, const Label& concrete_string);
HreCost hre_cost(const Label& h);
Label hre_join(const Label& h1, const Label& h2);
SigmaCount hre_count(std::span<const Label> hs, uint64_t cap);

}  // namespace anime
