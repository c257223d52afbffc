#include "anime/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "anime/dag_feature.hpp"
#include "anime/detail/rng.hpp"
#include "anime/flat_feature.hpp"
#include "anime/hre_feature.hpp"
#include "anime/tuple_feature.hpp"

namespace anime {

namespace {

std::vector<size_t> draw_group_sizes(size_t n, size_t g, size_t min_size, size_t max_size,
                                     detail::Rng& rng) {
    std::vector<size_t> sizes(g);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        size_t total = 0;
        for (size_t& s : sizes) {
            s = static_cast<size_t>(rng.between(static_cast<int64_t>(min_size),
                                                static_cast<int64_t>(max_size)));
            total += s;
        }
        if (total == n) return sizes;
    }
    // Clamp the last group, then push any leftover around while keeping | >= 1.
    size_t total = 0;
    for (size_t i = 0; i + 1 < g; ++i) total += sizes[i];
    sizes[g - 1] = total >= n ? 1 : n - total;
    total += sizes[g - 1];
    size_t guard = 0;
    while (total != n && guard++ < 1000000) {
        for (size_t i = 0; i < g && total != n; ++i) {
            if (total < n) {
                ++sizes[i];
                ++total;
            } else if (sizes[i] > 1) {
                --sizes[i];
                --total;
            }
        }
    }
    if (total != n) throw InternalError("access-control group sizing failed");
    return sizes;
}

}  // namespace

GeneratedDataset gen_access_control(const AccessControlSpec& spec) {
    if (spec.n == 0 || spec.g == 0 || spec.m == 0)
        throw UsageError("access-control spec needs positive n, g, m");
    if (spec.min_size == 0 || spec.min_size > spec.max_size)
        throw UsageError("access-control group size bounds are invalid");
    if (spec.g * spec.min_size > spec.n || spec.g * spec.max_size < spec.n)
        throw UsageError("access-control group size bounds cannot partition n servers");

    detail::Rng rng(spec.seed);
    std::vector<size_t> sizes = draw_group_sizes(spec.n, spec.g, spec.min_size, spec.max_size, rng);

    std::vector<std::string> servers(spec.n);
    for (size_t i = 0; i < spec.n; ++i) servers[i] = "s" + std::to_string(i + 1);
    std::vector<size_t> order(spec.n);
    for (size_t i = 0; i < spec.n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<std::string> nodes{"Any"};
    std::vector<DagFeature::Edge> edges;
    std::vector<std::vector<std::string>> group_members(spec.g);
    size_t cursor = 0;
    for (size_t gi = 0; gi < spec.g; ++gi) {
        std::string gname = "G" + std::to_string(gi + 1);
        nodes.push_back(gname);
        edges.emplace_back("Any", gname);
        for (size_t j = 0; j < sizes[gi]; ++j) {
            const std::string& sname = servers[order[cursor++]];
            nodes.push_back(sname);
            edges.emplace_back(gname, sname);
            group_members[gi].push_back(sname);
        }
    }

    auto endpoint_dag = std::make_shared<DagFeature>("endpoint", nodes, edges);
    auto feature = std::make_shared<TupleFeature>(
        "access", std::vector<TupleFeature::Component>{{"src", endpoint_dag},
                                                       {"dst", endpoint_dag}});
    auto flat_endpoint = std::make_shared<FlatFeature>("endpoint", servers);
    auto alt_feature = std::make_shared<TupleFeature>(
        "access", std::vector<TupleFeature::Component>{{"src", flat_endpoint},
                                                       {"dst", flat_endpoint}});

    auto draw_endpoint = [&]() {
        if (rng.chance(0.5)) {
            size_t gi = static_cast<size_t>(rng.below(spec.g));
            return endpoint_dag->label("G" + std::to_string(gi + 1));
        }
        return endpoint_dag->label(servers[rng.below(spec.n)]);
    };

    GeneratedDataset ds;
    ds.feature = feature;
    ds.alt_feature = alt_feature;
    std::set<Label> pair_set;
    for (size_t mi = 0; mi < spec.m; ++mi) {
        Label a = draw_endpoint();
        Label b = draw_endpoint();
        ds.truth.emplace_back(feature->label({a, b}));
        auto sa = endpoint_dag->sigma(a, spec.n);
        auto sb = endpoint_dag->sigma(b, spec.n);
        for (const Label& x : *sa)
            for (const Label& y : *sb) pair_set.insert(feature->label({x, y}));
    }
    for (const Label& l : pair_set) ds.possible.emplace_back(l);
    ds.observed = ds.possible;
    return ds;
}

Path to_flat_variant(const GeneratedDataset& ds, const Path& p) {
    const auto* hier = dynamic_cast<const TupleFeature*>(ds.feature.get());
    const auto* flat = dynamic_cast<const TupleFeature*>(ds.alt_feature.get());
    if (hier == nullptr || flat == nullptr)
        throw UsageError("dataset has no flat variant");
    const TupleValue& v = std::get<TupleValue>(p.label().value);
    std::vector<Label> parts;
    parts.reserve(v.parts.size());
    for (size_t i = 0; i < v.parts.size(); ++i) {
        const auto& comp = *flat->components()[i].feature;
        parts.push_back(comp.parse_text(hier->components()[i].feature->print_text(v.parts[i])));
    }
    return Path(flat->label(std::move(parts)));
}

GeneratedDataset gen_isp(const IspSpec& spec) {
    if (spec.nodes == 0 || spec.destinations == 0 || spec.egresses == 0)
        throw UsageError("isp spec needs positive counts");
    if (spec.egresses > spec.nodes)
        throw UsageError("isp spec has more egresses than nodes");

    detail::Rng rng(spec.seed);
    std::vector<std::string> orgs(spec.destinations);
    for (size_t i = 0; i < orgs.size(); ++i) orgs[i] = "org" + std::to_string(i + 1);
    std::vector<std::string> devices(spec.nodes);
    for (size_t i = 0; i < devices.size(); ++i) devices[i] = "n" + std::to_string(i + 1);

    auto org_f = std::make_shared<FlatFeature>("organization", orgs);
    auto dev_f = std::make_shared<FlatFeature>("device", devices);
    auto feature = std::make_shared<TupleFeature>(
        "record", std::vector<TupleFeature::Component>{
                      {"organization", org_f}, {"ingress", dev_f}, {"egress", dev_f}});

    GeneratedDataset ds;
    ds.feature = feature;
    for (size_t oi = 0; oi < orgs.size(); ++oi) {
        size_t egress = rng.below(spec.egresses);  // egress devices are the first few
        Label org = org_f->label(orgs[oi]);
        Label eg = dev_f->label(devices[egress]);
        ds.truth.emplace_back(feature->label({org, dev_f->top(), eg}));
        for (size_t ni = 0; ni < devices.size(); ++ni)
            ds.possible.emplace_back(feature->label({org, dev_f->label(devices[ni]), eg}));
    }
    ds.observed = ds.possible;
    return ds;
}

// ---- fat tree -------------------------------------------------------------------

namespace {

struct FatTreeTopology {
    std::vector<std::string> device_names;            // concrete device per node id
    std::vector<std::vector<size_t>> adj;
    std::vector<size_t> servers;                      // node ids
    std::vector<size_t> isps;
    std::vector<size_t> cluster_of_server;            // cluster index per servers[] entry
};

std::string cluster_tag(size_t ci) { return ci == 0 ? "DMZ" : "Cl" + std::to_string(ci); }
std::string cluster_dev(size_t ci) { return ci == 0 ? "dmz" : "cl" + std::to_string(ci); }

}  // namespace

GeneratedDataset gen_fattree(const FatTreeSpec& spec) {
    if (spec.c == 0 || spec.f == 0 || spec.p == 0 || spec.l == 0 || spec.r == 0 ||
        spec.s == 0 || spec.g == 0 || spec.i == 0 || spec.d == 0)
        throw UsageError("fat-tree spec needs positive counts");
    // Each role label must group at least two devices, otherwise the label DAG
    // would contain two names for the same set.
    if (spec.c < 2 || spec.f < 2 || spec.p < 2 || spec.l < 2 || spec.g < 2 || spec.i < 2)
        throw UsageError("fat-tree spec needs c, f, p, l, g, i >= 2");

    FatTreeTopology topo;
    auto add_node = [&](const std::string& name) {
        topo.device_names.push_back(name);
        topo.adj.emplace_back();
        return topo.device_names.size() - 1;
    };
    auto link = [&](size_t a, size_t b) {
        topo.adj[a].push_back(b);
        topo.adj[b].push_back(a);
    };

    // Device label hierarchy: Any over global roles over per-cluster roles over
    // concrete devices. Gateways and ISPs are shared, so they sit directly under
    // their role label.
    std::vector<std::string> nodes{"Any", "Server", "Leaf", "Spine", "Firewall",
                                   "Gateway", "Internet"};
    std::vector<DagFeature::Edge> edges;
    for (const char* role : {"Server", "Leaf", "Spine", "Firewall", "Gateway", "Internet"})
        edges.emplace_back("Any", role);

    std::vector<size_t> gateways, firewalls_all;
    for (size_t gi = 0; gi < spec.g; ++gi) {
        std::string name = "gw" + std::to_string(gi + 1);
        gateways.push_back(add_node(name));
        nodes.push_back(name);
        edges.emplace_back("Gateway", name);
    }
    for (size_t ii = 0; ii < spec.i; ++ii) {
        std::string name = "isp" + std::to_string(ii + 1);
        topo.isps.push_back(add_node(name));
        nodes.push_back(name);
        edges.emplace_back("Internet", name);
        for (size_t gw : gateways) link(topo.isps.back(), gw);
    }

    for (size_t ci = 0; ci < spec.c; ++ci) {
        std::string tag = cluster_tag(ci), dev = cluster_dev(ci);
        for (const char* role : {"Server", "Leaf", "Spine", "Firewall"}) {
            nodes.push_back(tag + role);
            edges.emplace_back(role, tag + role);
        }
        std::vector<size_t> fws, spines, leaves;
        for (size_t fi = 0; fi < spec.f; ++fi) {
            std::string name = dev + "fw" + std::to_string(fi + 1);
            fws.push_back(add_node(name));
            nodes.push_back(name);
            edges.emplace_back(tag + "Firewall", name);
            for (size_t gw : gateways) link(fws.back(), gw);
        }
        for (size_t pi = 0; pi < spec.p; ++pi) {
            std::string name = dev + "sp" + std::to_string(pi + 1);
            spines.push_back(add_node(name));
            nodes.push_back(name);
            edges.emplace_back(tag + "Spine", name);
            for (size_t fw : fws) link(spines.back(), fw);
        }
        for (size_t li = 0; li < spec.l; ++li) {
            std::string name = dev + "lf" + std::to_string(li + 1);
            leaves.push_back(add_node(name));
            nodes.push_back(name);
            edges.emplace_back(tag + "Leaf", name);
            for (size_t sp : spines) link(leaves.back(), sp);
            for (size_t ri = 0; ri < spec.r; ++ri) {
                for (size_t si = 0; si < spec.s; ++si) {
                    std::string sname = dev + "sv" + std::to_string(li * spec.r * spec.s +
                                                                    ri * spec.s + si + 1);
                    size_t sid = add_node(sname);
                    nodes.push_back(sname);
                    edges.emplace_back(tag + "Server", sname);
                    link(sid, leaves.back());
                    topo.servers.push_back(sid);
                    topo.cluster_of_server.push_back(ci);
                }
            }
        }
    }

    auto device_dag = std::make_shared<DagFeature>("device", nodes, edges);

    // All shortest paths between a pair, as device-name token sequences.
    size_t node_count = topo.adj.size();
    auto all_shortest = [&](size_t src, size_t dst) {
        std::vector<int> dist(node_count, -1);
        std::vector<size_t> frontier{src};
        dist[src] = 0;
        while (!frontier.empty() && dist[dst] < 0) {
            std::vector<size_t> next;
            for (size_t u : frontier)
                for (size_t v : topo.adj[u])
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        next.push_back(v);
                    }
            frontier = std::move(next);
        }
        std::vector<std::vector<size_t>> paths;
        if (dist[dst] < 0) return paths;
        std::vector<size_t> walk{dst};
        auto rec = [&](auto&& self, size_t v) -> void {
            if (v == src) {
                paths.emplace_back(walk.rbegin(), walk.rend());
                return;
            }
            for (size_t u : topo.adj[v])
                if (dist[u] == dist[v] - 1) {
                    walk.push_back(u);
                    self(self, u);
                    walk.pop_back();
                }
        };
        rec(rec, dst);
        std::sort(paths.begin(), paths.end());
        return paths;
    };

    // Ordered endpoint pairs allowed by the intent families.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < topo.servers.size(); ++a)
        for (size_t b = 0; b < topo.servers.size(); ++b)
            if (topo.cluster_of_server[a] == topo.cluster_of_server[b])
                pairs.emplace_back(topo.servers[a], topo.servers[b]);
    for (size_t sv : topo.servers)
        for (size_t isp : topo.isps) pairs.emplace_back(sv, isp);
    for (size_t a = 0; a < topo.servers.size(); ++a)
        if (topo.cluster_of_server[a] == 0)
            for (size_t isp : topo.isps) pairs.emplace_back(isp, topo.servers[a]);
    for (size_t a = 0; a < topo.servers.size(); ++a)
        if (topo.cluster_of_server[a] == 0)
            for (size_t b = 0; b < topo.servers.size(); ++b)
                if (topo.cluster_of_server[b] != 0)
                    pairs.emplace_back(topo.servers[a], topo.servers[b]);

    detail::Rng rng(spec.seed);
    std::vector<std::vector<std::vector<size_t>>> per_pair;
    per_pair.reserve(pairs.size());
    size_t longest = 1;
    for (auto [src, dst] : pairs) {
        auto ps = src == dst ? std::vector<std::vector<size_t>>{{src}} : all_shortest(src, dst);
        if (ps.empty())
            throw UsageError("fat-tree endpoints are disconnected under the intents");
        longest = std::max(longest, ps.front().size());
        per_pair.push_back(std::move(ps));
    }

    uint32_t bound = std::max<uint32_t>(spec.d, static_cast<uint32_t>(longest));
    auto feature = std::make_shared<HreFeature>("path", device_dag, bound);

    GeneratedDataset ds;
    ds.feature = feature;
    auto to_label = [&](const std::vector<size_t>& ids) {
        std::vector<Label> tokens;
        tokens.reserve(ids.size());
        for (size_t id : ids) tokens.push_back(device_dag->label(topo.device_names[id]));
        return feature->string_label(tokens);
    };
    for (size_t pi = 0; pi < per_pair.size(); ++pi) {
        for (const auto& ids : per_pair[pi]) ds.possible.emplace_back(to_label(ids));
        const auto& pick = per_pair[pi][rng.below(per_pair[pi].size())];
        ds.observed.emplace_back(to_label(pick));
    }

    // Truth intents, one HRE per path shape of each intent family.
    auto expr = [&](std::vector<std::pair<std::string, bool>> parts) {
        std::vector<HreElement> elems;
        elems.reserve(parts.size());
        for (auto& [name, plus] : parts) elems.push_back({device_dag->label(name), plus});
        return Intent(feature->expression(std::move(elems)));
    };
    for (size_t ci = 0; ci < spec.c; ++ci) {
        std::string t = cluster_tag(ci);
        ds.truth.push_back(expr({{t + "Server", false}}));
        ds.truth.push_back(expr({{t + "Server", false}, {t + "Leaf", false}, {t + "Server", false}}));
        ds.truth.push_back(expr({{t + "Server", false},
                                 {t + "Leaf", false},
                                 {t + "Spine", false},
                                 {t + "Leaf", false},
                                 {t + "Server", false}}));
        ds.truth.push_back(expr({{t + "Server", false},
                                 {t + "Leaf", false},
                                 {t + "Spine", false},
                                 {t + "Firewall", false},
                                 {"Gateway", false},
                                 {"Internet", false}}));
    }
    ds.truth.push_back(expr({{"Internet", false},
                             {"Gateway", false},
                             {"DMZFirewall", false},
                             {"DMZSpine", false},
                             {"DMZLeaf", false},
                             {"DMZServer", false}}));
    for (size_t ci = 1; ci < spec.c; ++ci) {
        std::string t = cluster_tag(ci);
        ds.truth.push_back(expr({{"DMZServer", false},
                                 {"DMZLeaf", false},
                                 {"DMZSpine", false},
                                 {"DMZFirewall", false},
                                 {"Gateway", false},
                                 {t + "Firewall", false},
                                 {t + "Spine", false},
                                 {t + "Leaf", false},
                                 {t + "Server", false}}));
    }
    return ds;
}

GeneratedDataset observe_subset(const GeneratedDataset& ds, double rate, uint64_t seed) {
    if (!(rate > 0.0) || rate > 1.0) throw UsageError("observation rate must be in (0, 1]");
    GeneratedDataset out = ds;
    size_t keep = static_cast<size_t>(std::ceil(rate * static_cast<double>(ds.observed.size())));
    if (keep >= ds.observed.size()) return out;
    detail::Rng rng(seed);
    std::vector<size_t> picks = rng.sample_indices(ds.observed.size(), keep);
    out.observed.clear();
    out.observed.reserve(keep);
    for (size_t idx : picks) out.observed.push_back(ds.observed[idx]);
    return out;
}

}  // namespace anime
