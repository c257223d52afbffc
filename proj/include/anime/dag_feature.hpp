#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "anime/detail/bitset.hpp"
#include "anime/feature.hpp"

namespace anime {

// A universe given explicitly as a DAG. Each node is read as the set of leaves
// reachable from it; cost is the size of that set. sigma bitsets are memoized at
// construction, so leq and join are bit operations over them.
class DagFeature : public Feature {
public:
    using Edge = std::pair<std::string, std::string>;

    // Rejects cycles, duplicate or empty names, unknown edge endpoints, universes
    // without a greatest element, and distinct nodes with identical sigma sets
    // (those would break antisymmetry of the order).
    DagFeature(std::string name, std::vector<std::string> node_names, std::vector<Edge> edges);

    Label label(const std::string& node_name) const;
    Label label_at(uint32_t index) const;
    uint32_t index_of(const std::string& node_name) const;
    const std::string& node_name(uint32_t index) const;

    size_t node_count() const { return names_.size(); }
    size_t leaf_count() const { return leaves_.size(); }
    const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

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

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, uint32_t> by_name_;
    std::vector<detail::Bitset> sigma_;   // per node, over leaf slots
    std::vector<uint32_t> leaves_;        // node index per leaf slot
    uint32_t root_ = 0;
};

}  // namespace anime
