#pragma once

#include <memory>

#include "anime/dag_feature.hpp"
#include "anime/hre_feature.hpp"
#include "anime/ip_prefix_feature.hpp"
#include "anime/tuple_feature.hpp"

namespace anime::testing {

// Data-center device hierarchy: Any:7 over User:3 {U1,U2,U3},
// Firewall:2 {FW1,FW2}, Server:2 {S1,S2}.
inline std::shared_ptr<DagFeature> make_dc_devices() {
    return std::make_shared<DagFeature>(
        "device",
        std::vector<std::string>{"Any", "User", "Firewall", "Server", "U1", "U2", "U3", "FW1",
                                 "FW2", "S1", "S2"},
        std::vector<DagFeature::Edge>{{"Any", "User"},
                                      {"Any", "Firewall"},
                                      {"Any", "Server"},
                                      {"User", "U1"},
                                      {"User", "U2"},
                                      {"User", "U3"},
                                      {"Firewall", "FW1"},
                                      {"Firewall", "FW2"},
                                      {"Server", "S1"},
                                      {"Server", "S2"}});
}

// ISP device hierarchy: Any:7 over Internal:5 {R1..R5} and External:2 {AS1,AS2}.
inline std::shared_ptr<DagFeature> make_isp_devices() {
    return std::make_shared<DagFeature>(
        "device",
        std::vector<std::string>{"Any", "Internal", "External", "R1", "R2", "R3", "R4", "R5",
                                 "AS1", "AS2"},
        std::vector<DagFeature::Edge>{{"Any", "Internal"},
                                      {"Any", "External"},
                                      {"Internal", "R1"},
                                      {"Internal", "R2"},
                                      {"Internal", "R3"},
                                      {"Internal", "R4"},
                                      {"Internal", "R5"},
                                      {"External", "AS1"},
                                      {"External", "AS2"}});
}

struct DcFlowFixture {
    std::shared_ptr<DagFeature> devices;
    std::shared_ptr<IpPrefixFeature> dst_ip;
    std::shared_ptr<TupleFeature> flow;  // (dstIP, start, waypoint, end)

    Label flow_label(const std::string& ip, const std::string& start,
                     const std::string& waypoint, const std::string& end) const {
        return flow->label({dst_ip->label(ip), devices->label(start), devices->label(waypoint),
                            devices->label(end)});
    }
};

inline DcFlowFixture make_dc_flow_feature() {
    DcFlowFixture fx;
    fx.devices = make_dc_devices();
    fx.dst_ip = std::make_shared<IpPrefixFeature>("dstIP");
    fx.flow = std::make_shared<TupleFeature>(
        "flow", std::vector<TupleFeature::Component>{{"dstIP", fx.dst_ip},
                                                     {"start", fx.devices},
                                                     {"waypoint", fx.devices},
                                                     {"end", fx.devices}});
    return fx;
}

// The six forwarding paths of the data-center example.
inline std::vector<Path> dc_example_paths(const DcFlowFixture& fx) {
    return {Path(fx.flow_label("10.0.1.2/32", "U1", "FW1", "S1")),
            Path(fx.flow_label("10.0.1.2/32", "U2", "FW1", "S1")),
            Path(fx.flow_label("10.0.1.2/32", "U3", "FW2", "S1")),
            Path(fx.flow_label("10.0.1.3/32", "U1", "FW1", "S2")),
            Path(fx.flow_label("10.0.1.3/32", "U2", "FW2", "S2")),
            Path(fx.flow_label("10.0.1.3/32", "U3", "FW2", "S2"))};
}

inline std::shared_ptr<HreFeature> make_isp_hre(uint32_t d = 6) {
    return std::make_shared<HreFeature>("path", make_isp_devices(), d);
}

}  // namespace anime::testing
