#include <doctest.h>

#include <map>
#include <random>

#include "hlc/invariants.hpp"
#include "hlc/moves.hpp"
#include "hlc/reduce.hpp"
#include "hlc/sums.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

std::vector<Diagram> sample_diagrams() {
    std::vector<Diagram> ds;
    for (int q = 2; q <= 4; ++q)
        for (auto& g : enumerate_plane_graphs(q))
            for (auto& d : assign_crossings(g)) ds.push_back(d);
    for (auto& nd : read_diagram_file(oracle::fixture("graphs.hlc"))) ds.push_back(nd.d);
    return ds;
}

}  // namespace

TEST_CASE("every move kind keeps A4 counts and linking divisors") {
    auto a4 = alternating_group(4);
    std::mt19937 rng(20240601);
    std::map<MoveKind, int> tried;
    for (auto& d : sample_diagrams()) {
        auto sites = enumerate_move_sites(d, kRIHMoves, d.crossing_count() + 2);
        if (sites.empty()) continue;
        std::shuffle(sites.begin(), sites.end(), rng);
        // one site of each kind present, then a few more at random
        std::vector<MoveStep> pick;
        std::map<MoveKind, int> have;
        for (auto& s : sites)
            if (have[s.kind]++ == 0) pick.push_back(s);
        for (size_t i = 0; i < std::min<size_t>(sites.size(), 3); ++i) pick.push_back(sites[i]);
        uint64_t k = ks(d, a4).count;
        int n = component_count(d);
        for (size_t i = 0; i < pick.size(); ++i) {
            auto e = apply_move(d, pick[i]);
            CAPTURE(to_code(d));
            CAPTURE(describe(pick[i]));
            CHECK(ks(e, a4).count == k);
            REQUIRE(component_count(e) == n);
            CHECK(e.crossing_count() == d.crossing_count() + crossing_delta(pick[i]));
            if (n >= 2) CHECK(linking_matrix(e, 0, 1).divisors == linking_matrix(d, 0, 1).divisors);
            tried[pick[i].kind]++;
        }
    }
    for (auto k : {MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::R4, MoveKind::R5, MoveKind::IH}) {
        CAPTURE(static_cast<int>(k));
        CHECK(tried[k] > 0);
    }
}

TEST_CASE("bad sites are rejected") {
    auto hopf = braid_closure(2, {1, 1});
    MoveStep bogus{MoveKind::R1, Direction::Apply, 0, -1, 0};
    CHECK_THROWS_AS(apply_move(hopf, bogus), std::invalid_argument);
}

TEST_CASE("reduce search") {
    auto a4 = alternating_group(4);
    // a kinked theta curve loses its crossing
    Diagram theta{theta_graph(), 0};
    auto sites = enumerate_move_sites(theta, bit(MoveKind::R1), 2);
    REQUIRE_FALSE(sites.empty());
    auto fat = apply_move(theta, sites.front());
    CHECK(fat.crossing_count() == 1);
    auto r = reduce_search(fat, {}, kRMoves);
    CHECK(r.verdict == Verdict::ReducedTo);
    CHECK(r.reached.crossing_count() < fat.crossing_count());
    // replaying the path reproduces the reached diagram
    Diagram cur = fat;
    for (auto& m : r.path) cur = apply_move(cur, m);
    CHECK(diagram_code(cur, true) == diagram_code(r.reached, true));
    CHECK(ks(r.reached, a4).count == ks(fat, a4).count);
}

TEST_CASE("multi-component diagrams up to five crossings all reduce") {
    for (int q = 0; q <= 5; ++q) {
        std::vector<Diagram> seeds;
        for (auto& g : enumerate_plane_graphs(q))
            for (auto& d : assign_crossings(g))
                if (component_count(d) >= 2) seeds.push_back(d);
        for (auto& r : reduce_batch(seeds, {}, kRIHMoves)) CHECK(r.verdict == Verdict::ReducedTo);
    }
}

TEST_CASE("graph pool is the R-move classification up to four crossings") {
    auto pool = read_diagram_file(oracle::fixture("graphs.hlc"));
    std::vector<Diagram> seeds;
    for (auto& nd : pool) seeds.push_back(nd.d);
    size_t fixtures = seeds.size();
    for (int q = 0; q <= 4; ++q)
        for (auto& g : enumerate_plane_graphs(q))
            for (auto& d : assign_crossings(g)) seeds.push_back(d);
    auto res = reduce_batch(seeds, {}, kRMoves);
    std::map<int, int> fixture_of_class;
    for (size_t i = 0; i < fixtures; ++i) {
        CAPTURE(pool[i].name);
        REQUIRE(res[i].verdict == Verdict::Survivor);
        CHECK(fixture_of_class.emplace(res[i].class_id, static_cast<int>(i)).second);
    }
    for (size_t i = fixtures; i < seeds.size(); ++i)
        if (res[i].verdict == Verdict::Survivor) CHECK(fixture_of_class.count(res[i].class_id) == 1);
        else CHECK(res[i].verdict == Verdict::ReducedTo);
}

TEST_CASE("mirror witness search distinguishes a chiral link from its mirror") {
    auto tref = braid_closure(2, {1, 1, 1});
    auto m = meet_search(tref, {mirror(tref)}, Budget{-1, 20000}, kRMoves, false);
    CHECK(m.target == -1);
    auto fig8 = braid_closure(3, {1, -2, 1, -2});
    auto w = meet_search(fig8, {mirror(fig8)}, Budget{-1, 200000}, kRMoves, false);
    CHECK(w.target == 0);
    auto same = meet_search(tref, {mirror(tref)}, Budget{-1, 1000}, kRMoves, true);
    CHECK(same.target == 0);
}
