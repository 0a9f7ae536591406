#include <doctest.h>

#include "hlc/composites.hpp"
#include "hlc/fixtures.hpp"
#include "hlc/invariants.hpp"
#include "hlc/sums.hpp"
#include "support.hpp"

using namespace hlc;

TEST_CASE("sums add crossings and components") {
    auto pool = load_pool(oracle::fixture("graphs.hlc"));
    std::vector<Diagram> links{braid_closure(2, {1, 1}), braid_closure(2, {1, 1, 1}), braid_closure(2, {1, 1, 1, 1})};
    for (auto& g : pool)
        for (auto& l : links) {
            auto es = edge_sites(g.d);
            auto ls = edge_sites(l);
            for (bool flip : {false, true}) {
                auto s = order2_sum(g.d, es.front(), l, ls.front(), flip);
                CHECK(s.crossing_count() == g.d.crossing_count() + l.crossing_count());
                CHECK(component_count(s) == component_count(g.d) + component_count(l) - 1);
            }
            auto o = order1_sum(g.d, 0, l, 0);
            CHECK(o.crossing_count() == g.d.crossing_count() + l.crossing_count());
            CHECK(component_count(o) == component_count(g.d) + component_count(l) - 1);
            CHECK(diagram_connectivity(o) == 1);
        }
    auto hopf = links[0];
    CHECK_THROWS(order1_sum(hopf, 2, hopf, 0));
    CHECK_THROWS(order2_sum(hopf, EdgeSite{3 * 4}, hopf, EdgeSite{0}, false));
}

TEST_CASE("summing an unknotted circle changes nothing") {
    auto a4 = alternating_group(4);
    auto g21 = load_pool(oracle::fixture("graphs.hlc"))[1].d;
    Diagram circle = diagram_from_code("X(1,2,2,1)");
    REQUIRE(component_count(circle) == 1);
    auto s = order2_sum(g21, edge_sites(g21).front(), circle, edge_sites(circle).front(), false);
    CHECK(ks(s, a4).count == ks(g21, a4).count);
}

TEST_CASE("known composites") {
    auto a4 = alternating_group(4);
    auto hopf = braid_closure(2, {1, 1});
    Diagram theta{theta_graph(), 0};
    // the theta curve with a Hopf link in each of its three arcs
    Diagram d = theta;
    for (int k = 0; k < 3; ++k) {
        std::vector<EdgeSite> arcs;
        auto comps = trace_components(d);
        for (auto e : edge_sites(d))
            if (comps.trivalent[comps.of_slot[e.slot]] > 0) arcs.push_back(e);
        // one site on the arc of the theta curve that has no crossings yet
        EdgeSite pick = arcs.front();
        for (auto e : arcs) {
            int a = e.slot, b = d.g.link[a];
            if (d.g.deg[vert_of(a)] == 3 && d.g.deg[vert_of(b)] == 3) pick = e;
        }
        d = order2_sum(d, pick, hopf, edge_sites(hopf).front(), false);
    }
    CHECK(d.crossing_count() == 6);
    CHECK(component_count(d) == 4);
    CHECK(ks(d, a4).count == 1242);
    // unknot o Hopf is the handcuff-style 2-crossing reducible link
    Diagram unknot;
    unknot.free_loops = 1;
    auto r = order1_sum(unknot, 0, hopf, 0);
    CHECK(r.crossing_count() == 2);
    CHECK(component_count(r) == 2);
    CHECK(diagram_connectivity(r) == 1);
}

TEST_CASE("braid closures") {
    CHECK(component_count(braid_closure(2, {1, 1})) == 2);
    CHECK(component_count(braid_closure(2, {1, 1, 1})) == 1);
    CHECK(component_count(braid_closure(3, {1, 2, 1, 2, 1, 2})) == 3);
    CHECK_THROWS(braid_closure(2, {2}));
}
