#include <doctest.h>

#include <set>

#include "hlc/plane_graph.hpp"

using namespace hlc;

namespace {

std::set<CanonicalCode> codes(const std::vector<PlaneGraph>& gs, bool reflect) {
    std::set<CanonicalCode> s;
    for (auto& g : gs) s.insert(canonical_code(g, CodeOptions{false, reflect}));
    return s;
}

}  // namespace

TEST_CASE("generator agrees with dart pairing up to three crossings") {
    // the oracle excludes parallel edges between the trivalent vertices, i.e. the theta curve
    for (int q = 1; q <= 3; ++q) {
        auto a = enumerate_plane_graphs(q);
        auto b = enumerate_plane_graphs_bruteforce(q);
        CAPTURE(q);
        CHECK(a.size() == b.size());
        CHECK(codes(a, true) == codes(b, true));
        auto c = enumerate_plane_graphs(q, EnumOptions{false});
        auto d = enumerate_plane_graphs_bruteforce(q, EnumOptions{false});
        CHECK(codes(c, false) == codes(d, false));
    }
}

TEST_CASE("small counts") {
    REQUIRE(enumerate_plane_graphs(0).size() == 1);
    CHECK(canonical_code(enumerate_plane_graphs(0)[0]) == canonical_code(theta_graph()));
    CHECK(enumerate_plane_graphs(1).empty());
    CHECK(enumerate_plane_graphs(2).size() == 1);
    CHECK_THROWS_AS(enumerate_plane_graphs(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_plane_graphs(-1), std::invalid_argument);
}

TEST_CASE("generated graphs are spherical, valid and pairwise distinct") {
    for (int q = 0; q <= 5; ++q) {
        auto gs = enumerate_plane_graphs(q);
        std::set<CanonicalCode> seen;
        for (auto& g : gs) {
            std::string why;
            REQUIRE(g.is_valid(&why));
            CHECK(g.count(3) == 2);
            CHECK(g.count(4) == q);
            CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2 * g.connected_parts());
            CHECK(seen.insert(canonical_code(g)).second);
        }
    }
}

TEST_CASE("without mirror identification nothing is lost") {
    for (int q = 2; q <= 4; ++q) {
        auto with = enumerate_plane_graphs(q);
        auto without = enumerate_plane_graphs(q, EnumOptions{false});
        CHECK(without.size() >= with.size());
        CHECK(codes(without, true) == codes(with, true));
    }
}

TEST_CASE("text and json round trip") {
    for (auto& g : enumerate_plane_graphs(4)) {
        auto t = plane_graph_from_text(to_text(g));
        CHECK(canonical_code(t) == canonical_code(g));
        auto j = plane_graph_from_json(to_json(g));
        CHECK(canonical_code(j) == canonical_code(g));
    }
    CHECK_THROWS(plane_graph_from_text("T=2 Q=0 v0(t): d0"));
}

TEST_CASE("canonical code ignores relabelling") {
    for (auto& g : enumerate_plane_graphs(4)) {
        std::vector<int> perm(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) perm[i] = g.vertex_count() - 1 - i;
        auto h = permute_vertices(g, perm);
        CHECK(canonical_code(h) == canonical_code(g));
        CHECK(canonical_code(reflect(g)) == canonical_code(g));
        CHECK(canonical_code(rotate_vertex(g, 0, 1)) == canonical_code(g));
    }
}
