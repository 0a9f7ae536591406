#include <doctest.h>

#include "hlc/census.hpp"
#include "hlc/invariants.hpp"
#include "hlc/sums.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

// the trivial-factor divisibility conditions, written out independently
bool unknot_a4(uint64_t a4, int n) {
    uint64_t p3 = 1, p4 = 1;
    for (int i = 0; i < n; ++i) p3 *= 3, p4 *= 4;
    return (a4 + 6 * p3 + 2 * p4) % 12 == 0;
}

const Condition* find(const IrreducibilityVerdict& v, const std::string& name) {
    for (auto& c : v.conditions)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("divisibility arithmetic") {
    for (uint64_t a4 : {90u, 98u, 106u, 114u, 130u, 178u, 210u, 274u})
        CHECK(find(irreducibility_test(a4, std::nullopt, 2, 3), "unknot-A4")->divisible == unknot_a4(a4, 2));
    for (uint64_t a4 : {310u, 326u, 486u, 502u, 694u, 822u})
        CHECK(find(irreducibility_test(a4, std::nullopt, 3, 4), "unknot-A4")->divisible == unknot_a4(a4, 3));
    // the split link satisfies every trivial-factor condition
    auto split = irreducibility_test(178, 3675, 2, 3);
    CHECK(split.conclusion == Conclusion::Inconclusive);
    CHECK(find(split, "unknot-A4")->divisible);
    CHECK(find(split, "unknot-A5")->divisible);
    // without A5 the rank-3 rule cannot conclude when the A4 half divides
    auto v = irreducibility_test(90, std::nullopt, 2, 3);
    if (unknot_a4(90, 2)) CHECK(v.reason == "unknot factor needs ks_A5");
    CHECK(irreducibility_test(90, 600, 2, 2).reason == "rank bound below n+1");
    CHECK_THROWS(irreducibility_test(22, 77, 1, 2));
}

TEST_CASE("peripheral counts swap under mirror image") {
    auto a4 = alternating_group(4);
    for (auto& d : {braid_closure(2, {1, 1}), braid_closure(2, {1, 1, 1, 1}), braid_closure(3, {1, -2, 1, -2, -2})}) {
        for (int c = 0; c < 2; ++c) {
            auto r = chirality_test(d, c, a4);
            auto m = chirality_test(mirror(d), c, a4);
            CHECK(r.n == m.rn);
            CHECK(r.rn == m.n);
        }
    }
}

TEST_CASE("non-split certificates") {
    auto a4 = alternating_group(4);
    CHECK(nonsplit_certificate(braid_closure(2, {1, 1}), a4) == std::optional<std::string>("linking numbers connect all components"));
    CHECK_FALSE(nonsplit_certificate(Diagram{theta_graph(), 1}, a4));
    auto wh = braid_closure(3, {1, -2, 1, -2, -2});
    auto c = nonsplit_certificate(wh, a4);
    REQUIRE(c);
    CHECK(c->find("free-product") != std::string::npos);
    // Hopf#Hopf, a chain of three circles
    auto hopf = braid_closure(2, {1, 1});
    Diagram two = order2_sum(hopf, edge_sites(hopf).front(), hopf, edge_sites(hopf).front(), false);
    CHECK(component_count(two) == 3);
    CHECK(nonsplit_certificate(two, a4));
}

TEST_CASE("component deletion") {
    auto a4 = alternating_group(4);
    Diagram split{theta_graph(), 1};
    auto comps = trace_components(split);
    REQUIRE(comps.count == 2);
    int circle = comps.trivalent[0] == 0 ? 0 : 1;
    auto theta = delete_component(split, circle);
    CHECK(ks(theta, a4).count == 22);
    CHECK_THROWS(delete_component(split, 1 - circle));
    CHECK(delete_components(split, {1 - circle}).free_loops == 1);
    CHECK(deletion_ks(split, a4) == std::vector<uint64_t>{22});
    CHECK(components_type(split, a4) == "trivial + unknot");
    Diagram unknot;
    unknot.free_loops = 1;
    auto reducible = order1_sum(unknot, 0, braid_closure(2, {1, 1}), 0);
    CHECK(components_type(reducible, a4) == "trivial + unknot");
    auto knotted = order1_sum(braid_closure(2, {1, 1, 1}), 0, braid_closure(2, {1, 1}), 0);
    CHECK(components_type(knotted, a4).rfind("genus2", 0) == 0);
}
