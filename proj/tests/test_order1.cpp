#include <doctest.h>

#include <fstream>

#include "hlc/fixtures.hpp"
#include "hlc/invariants.hpp"
#include "support.hpp"

using namespace hlc;

TEST_CASE("link pool fixture") {
    auto pool = load_link_pool(oracle::fixture("links.toml"));
    REQUIRE(pool.size() >= 17);
    auto a4 = alternating_group(4);
    for (auto& l : pool) {
        CAPTURE(l.name);
        CHECK_FALSE(l.orbits.empty());
        size_t covered = 0;
        for (auto& o : l.orbits) covered += o.size();
        CHECK(covered == static_cast<size_t>(l.components));
        if (!l.d) continue;
        CHECK(l.d->crossing_count() == l.crossings);
        CHECK(component_count(*l.d) == l.components);
        CHECK(l.d->trivalent_count() == 0);
    }
}

TEST_CASE("order-1 census rows are realised by separated sums") {
    auto pool = load_link_pool(oracle::fixture("links.toml"));
    auto a4 = alternating_group(4);
    auto census = enumerate_order1_census(pool, 6, &a4);
    int total = 0;
    for (auto& row : census.rows) {
        CAPTURE(row.label());
        CHECK(row.annotated);
        CHECK(row.orbits_consistent);
        CHECK(row.pairs_separated == row.pairs_built);
        CHECK(row.crossings <= 6);
        total += row.count;
    }
    int by_c = 0;
    for (auto& [c, n] : census.totals) by_c += n;
    CHECK(total == by_c);
    for (auto& m : census.models) {
        CHECK(diagram_connectivity(m.d) == 1);
        CHECK(component_count(m.d) >= 2);
    }
}

TEST_CASE("a row without orbit data is unverified") {
    auto pool = load_link_pool(oracle::fixture("links.toml"));
    for (auto& l : pool)
        if (l.name == "Whitehead") l.orbits.clear();
    auto census = enumerate_order1_census(pool, 5);
    bool seen = false;
    for (auto& row : census.rows)
        if (row.right == "Whitehead") {
            seen = true;
            CHECK_FALSE(row.annotated);
        }
    CHECK(seen);
}

TEST_CASE("malformed link pools are rejected") {
    std::string path = "/tmp/hlc_bad_links.toml";
    {
        std::ofstream f(path);
        f << "[[link]]\nname = \"x\"\nbraid = [2, 1, 1]\norbits = [[0]]\n";
    }
    CHECK_THROWS(load_link_pool(path));
    {
        std::ofstream f(path);
        f << "[[link]]\nname = \"y\"\n";
    }
    CHECK_THROWS(load_link_pool(path));
}
