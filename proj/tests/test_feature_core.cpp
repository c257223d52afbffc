#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "anime/feature.hpp"
#include "support/paper_features.hpp"

using namespace anime;
using anime::testing::make_dc_devices;

namespace {

// Brute-force subset test over enumerated sigma sets; the independent route for
// the order-relation checks below.
bool sigma_subset(const Label& a, const Label& b) {
    auto sa = sigma(a, 1 << 20);
    auto sb = sigma(b, 1 << 20);
    REQUIRE(sa.has_value());
    REQUIRE(sb.has_value());
    std::set<Label> sb_set(sb->begin(), sb->end());
    return std::all_of(sa->begin(), sa->end(),
                       [&](const Label& l) { return sb_set.contains(l); });
}

}  // namespace

TEST_CASE("leq on the device hierarchy") {
    auto dev = make_dc_devices();
    CHECK(leq(dev->label("S1"), dev->label("Server")));
    CHECK_FALSE(leq(dev->label("Server"), dev->label("S1")));
    CHECK_FALSE(leq(dev->label("Server"), dev->label("Firewall")));
    CHECK(sigma_subset(dev->label("S1"), dev->label("Server")));
    CHECK_FALSE(sigma_subset(dev->label("Server"), dev->label("Firewall")));

    for (uint32_t i = 0; i < dev->node_count(); ++i)
        CHECK(leq(dev->label_at(i), dev->label_at(i)));  // reflexivity
}

TEST_CASE("leq rejects mixed features") {
    auto a = make_dc_devices();
    auto b = make_dc_devices();
    CHECK_THROWS_AS(leq(a->label("S1"), b->label("S1")), UsageError);
}

TEST_CASE("cost counts sigma") {
    auto dev = make_dc_devices();
    CHECK(cost(dev->label("Firewall")) == 2.0);
    CHECK(cost(dev->label("Any")) == 7.0);
    CHECK(cost(dev->label("User")) == 3.0);
    for (const char* leaf : {"U1", "U2", "U3", "FW1", "FW2", "S1", "S2"})
        CHECK(cost(dev->label(leaf)) == 1.0);
}

TEST_CASE("sigma materialization and overflow") {
    auto dev = make_dc_devices();
    auto server = sigma(dev->label("Server"), 10);
    REQUIRE(server.has_value());
    CHECK(std::set<Label>(server->begin(), server->end()) ==
          std::set<Label>{dev->label("S1"), dev->label("S2")});

    auto self = sigma(dev->label("U1"), 10);
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<Label>{dev->label("U1")});

    auto any = sigma(dev->label("Any"), 10);
    REQUIRE(any.has_value());
    CHECK(any->size() == 7);
    std::set<Label> expect;
    for (const char* leaf : {"U1", "U2", "U3", "FW1", "FW2", "S1", "S2"})
        expect.insert(dev->label(leaf));
    CHECK(std::set<Label>(any->begin(), any->end()) == expect);

    CHECK_FALSE(sigma(dev->label("Any"), 3).has_value());
}

TEST_CASE("represents against the motivating flow example") {
    auto fx = anime::testing::make_dc_flow_feature();
    IntentSet guess({Intent(fx.flow_label("10.0.1.2/32", "User", "Firewall", "S1"))}, 1);

    CHECK(represents(guess, Path(fx.flow_label("10.0.1.2/32", "U3", "FW2", "S1"))));
    CHECK_FALSE(represents(guess, Path(fx.flow_label("10.0.1.3/32", "U1", "FW1", "S2"))));

    Path p(fx.flow_label("10.0.1.2/32", "U1", "FW1", "S1"));
    CHECK(represents(IntentSet({Intent(p.label())}, 1), p));
}

TEST_CASE("join picks the cheapest covering label") {
    auto dev = make_dc_devices();
    CHECK(join(dev->label("U1"), dev->label("U2")) == dev->label("User"));
    CHECK(join(dev->label("U1"), dev->label("FW2")) == dev->label("Any"));
    for (uint32_t i = 0; i < dev->node_count(); ++i)
        CHECK(join(dev->label_at(i), dev->label_at(i)) == dev->label_at(i));
}

TEST_CASE("join is sound, commutative, and cost-monotone on the whole universe") {
    auto dev = make_dc_devices();
    for (uint32_t i = 0; i < dev->node_count(); ++i) {
        for (uint32_t j = 0; j < dev->node_count(); ++j) {
            Label a = dev->label_at(i), b = dev->label_at(j);
            Label ab = join(a, b);
            CHECK(leq(a, ab));
            CHECK(leq(b, ab));
            CHECK(ab == join(b, a));
            if (leq(a, b)) CHECK(cost(a) <= cost(b));
        }
    }
}

TEST_CASE("order is a partial order on the small universe") {
    auto dev = make_dc_devices();
    size_t n = dev->node_count();
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            Label a = dev->label_at(i), b = dev->label_at(j);
            if (i != j && leq(a, b)) CHECK_FALSE(leq(b, a));  // antisymmetry
            for (uint32_t k = 0; k < n; ++k) {
                Label c = dev->label_at(k);
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));  // transitivity
            }
        }
}

TEST_CASE("join_all folds deterministically") {
    auto dev = make_dc_devices();
    std::vector<Label> users{dev->label("U1"), dev->label("U2"), dev->label("U3")};
    CHECK(join_all(users) == dev->label("User"));

    std::vector<Label> one{dev->label("S1")};
    CHECK(join_all(one) == dev->label("S1"));

    // Independent route: scan every label for the cheapest superset of {U1, S1}.
    std::vector<Label> mixed{dev->label("U1"), dev->label("S1")};
    Label best = dev->label("Any");
    for (uint32_t i = 0; i < dev->node_count(); ++i) {
        Label cand = dev->label_at(i);
        if (leq(mixed[0], cand) && leq(mixed[1], cand) && cost(cand) < cost(best)) best = cand;
    }
    CHECK(best == dev->label("Any"));
    CHECK(join_all(mixed) == best);

    CHECK_THROWS_AS(join_all(std::vector<Label>{}), UsageError);
}

TEST_CASE("represents is monotone under intent domination") {
    auto dev = make_dc_devices();
    IntentSet narrow({Intent(dev->label("U1")), Intent(dev->label("S1"))}, 2);
    IntentSet wide({Intent(dev->label("User")), Intent(dev->label("Server"))}, 2);
    for (const char* leaf : {"U1", "U2", "U3", "FW1", "FW2", "S1", "S2"}) {
        Path p(dev->label(leaf));
        if (represents(narrow, p)) CHECK(represents(wide, p));
    }
}

TEST_CASE("path and intent set validation") {
    auto dev = make_dc_devices();
    CHECK_THROWS_AS(Path(dev->label("Server")), UsageError);  // not concrete
    CHECK_NOTHROW(Path(dev->label("S2")));
    CHECK_NOTHROW(Intent(dev->label("Server")));
    std::vector<Intent> three{Intent(dev->label("U1")), Intent(dev->label("U2")),
                              Intent(dev->label("U3"))};
    CHECK_THROWS_AS(IntentSet(three, 2), UsageError);  // over the k limit
}
