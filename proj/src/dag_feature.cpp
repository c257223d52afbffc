#include "anime/dag_feature.hpp"

#include <algorithm>

namespace anime {

DagFeature::DagFeature(std::string name, std::vector<std::string> node_names,
                       std::vector<Edge> edges)
    : Feature(std::move(name), FeatureKind::Dag),
      names_(std::move(node_names)),
      edges_(std::move(edges)) {
    if (names_.empty()) throw UsageError("dag feature '" + this->name() + "' has no nodes");
    for (uint32_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw UsageError("dag node with empty name");
        if (!by_name_.emplace(names_[i], i).second)
            throw UsageError("duplicate dag node name '" + names_[i] + "'");
    }

    std::vector<std::vector<uint32_t>> children(names_.size());
    std::vector<uint32_t> indegree(names_.size(), 0);
    for (const Edge& e : edges_) {
        auto p = by_name_.find(e.first);
        auto c = by_name_.find(e.second);
        if (p == by_name_.end() || c == by_name_.end())
            throw UsageError("dag edge references unknown node '" +
                             (p == by_name_.end() ? e.first : e.second) + "'");
        children[p->second].push_back(c->second);
        ++indegree[c->second];
    }

    // Kahn topological order; also the cycle check.
    std::vector<uint32_t> order;
    order.reserve(names_.size());
    std::vector<uint32_t> stack;
    for (uint32_t i = 0; i < names_.size(); ++i)
        if (indegree[i] == 0) stack.push_back(i);
    std::vector<uint32_t> deg = indegree;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (uint32_t c : children[v])
            if (--deg[c] == 0) stack.push_back(c);
    }
    if (order.size() != names_.size())
        throw UsageError("dag feature '" + this->name() + "' contains a cycle");

    for (uint32_t i = 0; i < names_.size(); ++i)
        if (children[i].empty()) {
            leaves_.push_back(i);
        }

    sigma_.assign(names_.size(), detail::Bitset(leaves_.size()));
    for (size_t slot = 0; slot < leaves_.size(); ++slot) sigma_[leaves_[slot]].set(slot);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (uint32_t c : children[*it]) sigma_[*it].or_with(sigma_[c]);

    // Greatest element: the node whose sigma covers every leaf.
    detail::Bitset all(leaves_.size());
    for (size_t slot = 0; slot < leaves_.size(); ++slot) all.set(slot);
    bool found = false;
    for (uint32_t i = 0; i < names_.size(); ++i)
        if (sigma_[i] == all) {
            root_ = i;
            found = true;
            break;
        }
    if (!found)
        throw UsageError("dag feature '" + this->name() + "' has no greatest element");

    // Two nodes with the same sigma set would be order-equal yet distinct.
    for (uint32_t i = 0; i < names_.size(); ++i)
        for (uint32_t j = i + 1; j < names_.size(); ++j)
            if (sigma_[i] == sigma_[j])
                throw UsageError("dag nodes '" + names_[i] + "' and '" + names_[j] +
                                 "' represent the same set");
}

Label DagFeature::label(const std::string& node_name) const {
    return label_at(index_of(node_name));
}

Label DagFeature::label_at(uint32_t index) const {
    if (index >= names_.size()) throw UsageError("dag node index out of range");
    return Label{this, index};
}

uint32_t DagFeature::index_of(const std::string& node_name) const {
    auto it = by_name_.find(node_name);
    if (it == by_name_.end())
        throw UsageError("unknown node '" + node_name + "' in feature '" + name() + "'");
    return it->second;
}

const std::string& DagFeature::node_name(uint32_t index) const {
    if (index >= names_.size()) throw UsageError("dag node index out of range");
    return names_[index];
}

uint32_t DagFeature::index_of_label(const Label& l) const {
    require_mine(l);
    const uint32_t* idx = std::get_if<uint32_t>(&l.value);
    if (idx == nullptr || *idx >= names_.size()) throw UsageError("malformed dag label");
    return *idx;
}

bool DagFeature::contains(const Label& l) const {
    if (l.feature != this) return false;
    const uint32_t* idx = std::get_if<uint32_t>(&l.value);
    return idx != nullptr && *idx < names_.size();
}

bool DagFeature::is_concrete(const Label& l) const {
    return sigma_[index_of_label(l)].count() == 1;
}

bool DagFeature::leq(const Label& a, const Label& b) const {
    return sigma_[index_of_label(a)].is_subset_of(sigma_[index_of_label(b)]);
}

double DagFeature::cost(const Label& l) const {
    return static_cast<double>(sigma_[index_of_label(l)].count());
}

Label DagFeature::join(const Label& a, const Label& b) const {
    detail::Bitset want = sigma_[index_of_label(a)];
    want.or_with(sigma_[index_of_label(b)]);
    // sigma-superset nodes need not be graph ancestors, so scan all of them.
    uint32_t best = root_;
    bool have = false;
    for (uint32_t i = 0; i < names_.size(); ++i) {
        if (!want.is_subset_of(sigma_[i])) continue;
        if (!have) {
            best = i;
            have = true;
            continue;
        }
        size_t ci = sigma_[i].count(), cb = sigma_[best].count();
        if (ci < cb || (ci == cb && names_[i] < names_[best])) best = i;
    }
    return Label{this, best};
}

Label DagFeature::top() const { return Label{this, root_}; }

std::optional<std::vector<Label>> DagFeature::sigma(const Label& l, uint64_t cap) const {
    const detail::Bitset& bs = sigma_[index_of_label(l)];
    if (bs.count() > cap) return std::nullopt;
    std::vector<Label> out;
    out.reserve(bs.count());
    for (size_t slot = 0; slot < leaves_.size(); ++slot)
        if (bs.test(slot)) out.push_back(Label{this, leaves_[slot]});
    return out;
}

std::optional<std::vector<Label>> DagFeature::universe(uint64_t cap) const {
    if (names_.size() > cap) return std::nullopt;
    std::vector<Label> out;
    out.reserve(names_.size());
    for (uint32_t i = 0; i < names_.size(); ++i) out.push_back(Label{this, i});
    return out;
}

std::string DagFeature::print_text(const Label& l) const {
    return names_[index_of_label(l)];
}

Label DagFeature::parse_text(const std::string& text) const {
    if (text == "*") return top();
    return label(text);
}

}  // namespace anime
