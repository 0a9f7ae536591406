#include <doctest.h>

#include <sstream>

#include "hlc/diagram.hpp"
#include "hlc/invariants.hpp"
#include "hlc/sums.hpp"
#include "support.hpp"

using namespace hlc;

TEST_CASE("code round trip") {
    for (int q = 0; q <= 4; ++q)
        for (auto& g : enumerate_plane_graphs(q))
            for (auto& d : assign_crossings(g)) {
                auto e = diagram_from_code(to_code(d));
                CHECK(diagram_code(e, false) == diagram_code(d, false));
            }
    CHECK_THROWS(diagram_from_code("X(1,2,3) V(1,2,3)"));
    CHECK_THROWS(diagram_from_code("V(1,2,3) V(1,2,4)"));
    CHECK_THROWS(diagram_from_code("X(1,2"));
    CHECK_THROWS(diagram_from_code("V(1,2,3) V(1,3,2) junk"));
    CHECK_THROWS(diagram_from_code(""));
    CHECK(diagram_from_code(" V(1,2,3)  V(1,3,2) O() ").free_loops == 1);
}

TEST_CASE("mirror and reflection") {
    auto a4 = alternating_group(4);
    for (auto& g : enumerate_plane_graphs(4))
        for (auto& d : assign_crossings(g)) {
            CHECK(diagram_code(mirror(mirror(d)), false) == diagram_code(d, false));
            CHECK(diagram_code(reflect(reflect(d)), false) == diagram_code(d, false));
            CHECK(diagram_code(reflect(d), true) == diagram_code(d, true));
            CHECK(component_count(mirror(d)) == component_count(d));
            // reflecting the plane and switching every crossing both give the mirror image
            CHECK(ks(reflect(d), a4).count == ks(mirror(d), a4).count);
        }
}

TEST_CASE("components and connectivity") {
    Diagram theta{theta_graph(), 0};
    CHECK(component_count(theta) == 1);
    CHECK_FALSE(is_decomposed(theta));
    CHECK(diagram_connectivity(theta) == 3);
    Diagram split{theta_graph(), 1};
    CHECK(component_count(split) == 2);
    CHECK(is_decomposed(split));
    CHECK(diagram_connectivity(split) == 0);
    auto hopf = braid_closure(2, {1, 1});
    CHECK(component_count(hopf) == 2);
    auto o1 = order1_sum(theta, 0, hopf, 0);
    CHECK(diagram_connectivity(o1) == 1);
    CHECK(is_decomposed(o1));
    for (int q = 0; q <= 5; ++q)
        for (auto& g : enumerate_plane_graphs(q))
            for (auto& d : assign_crossings(g)) CHECK(diagram_connectivity(d) <= 3);
}

TEST_CASE("crossing signs give linking numbers") {
    auto hopf = braid_closure(2, {1, 1});
    auto lm = linking_matrix(hopf, 0, 1);
    REQUIRE(lm.entries.size() == 1);
    CHECK(std::abs(lm.entries[0][0]) == 1);
    auto l4 = braid_closure(2, {1, 1, 1, 1});
    CHECK(std::abs(linking_matrix(l4, 0, 1).entries[0][0]) == 2);
    auto wh = braid_closure(3, {1, -2, 1, -2, -2});
    CHECK(linking_matrix(wh, 0, 1).entries[0][0] == 0);
    auto mh = mirror(hopf);
    CHECK(linking_matrix(mh, 0, 1).divisors == lm.divisors);
    auto o = orientation(hopf);
    auto om = orientation(mh);
    // same orientation on the same slots: every crossing changes sign
    if (o == om)
        for (int v = 0; v < hopf.g.vertex_count(); ++v) CHECK(crossing_sign(mh, om, v) == -crossing_sign(hopf, o, v));
}

TEST_CASE("elementary divisors") {
    CHECK(elementary_divisors({{2, 0}, {0, 3}}) == std::vector<long>{1, 6});
    CHECK(elementary_divisors({{0, 0}}).empty());
    CHECK(elementary_divisors({{4}, {6}}) == std::vector<long>{2});
}

TEST_CASE("diagram files") {
    std::istringstream in("# hlc-diagrams v1\nhopf: X(4,1,3,2) X(2,3,1,4)\n\n# comment\nV(1,2,3) V(1,3,2)\n");
    auto ds = read_diagrams(in);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].name == "hopf");
    CHECK(component_count(ds[0].d) == 2);
    std::ostringstream out;
    write_diagrams(out, ds);
    std::istringstream back(out.str());
    auto again = read_diagrams(back);
    REQUIRE(again.size() == 2);
    CHECK(diagram_code(again[1].d, false) == diagram_code(ds[1].d, false));
    std::istringstream v2("# hlc-diagrams v2\n");
    CHECK_THROWS(read_diagrams(v2));
    auto pool = read_diagram_file(oracle::fixture("graphs.hlc"));
    CHECK(pool.size() == 8);
}
