#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "anime/feature.hpp"

namespace anime {

// Access-control experiment: n servers partitioned into g groups; m generating
// intents of the form "endpoint a may reach endpoint b" where each endpoint is a
// group or a single server.
struct AccessControlSpec {
    size_t n = 100;
    size_t g = 5;
    size_t min_size = 5;
    size_t max_size = 30;
    size_t m = 10;
    uint64_t seed = 0;
};

// ISP experiment: (organization, ingress, egress) records, one per (org, node)
// pair, with every organization pinned to one primary egress.
struct IspSpec {
    size_t nodes = 25;
    size_t egresses = 5;
    size_t destinations = 100;
    uint64_t seed = 0;
};

// Fat-tree experiment: c clusters of f firewalls, p spines, l leaves with r racks
// of s servers each; g shared gateways towards i ISPs. Cluster 0 is the DMZ.
// The HRE length bound is max(d, longest possible path).
struct FatTreeSpec {
    size_t c = 2;
    size_t f = 2;
    size_t p = 2;
    size_t l = 2;
    size_t r = 1;
    size_t s = 2;
    size_t g = 2;
    size_t i = 2;
    uint32_t d = 8;
    uint64_t seed = 0;
};

struct GeneratedDataset {
    std::shared_ptr<const Feature> feature;
    std::vector<Path> possible;
    std::vector<Path> observed;        // subset of possible
    std::vector<Intent> truth;         // generating intents, for reports only
    std::shared_ptr<const Feature> alt_feature;  // flat variant (access-control)
};

GeneratedDataset gen_access_control(const AccessControlSpec& spec);
GeneratedDataset gen_isp(const IspSpec& spec);
GeneratedDataset gen_fattree(const FatTreeSpec& spec);

// Re-observes ceil(rate * |observed|) paths uniformly without replacement;
// possible paths and truth stay untouched so evaluation measures prediction.
GeneratedDataset observe_subset(const GeneratedDataset& ds, double rate, uint64_t seed);

// Translates an access-control path (hierarchical tuple) onto the flat variant.
Path to_flat_variant(const GeneratedDataset& ds, const Path& p);

}  // namespace anime
