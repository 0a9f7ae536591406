#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hlc/census.hpp"
#include "hlc/fixtures.hpp"
#include "hlc/invariants.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

std::map<std::string, Diagram> table1() {
    std::map<std::string, Diagram> out;
    for (auto& nd : read_diagram_file(oracle::fixture("table1.hlc"))) out[nd.name] = nd.d;
    return out;
}

CensusReport reference() { return read_report_file(oracle::fixture("census_report.jsonl")); }

}  // namespace

TEST_CASE("expected tables are self-consistent") {
    const auto& t = expected_tables();
    CHECK(t.ks.size() == 20);
    int listed = 0;
    for (auto& r : t.ks) listed += r.listed;
    CHECK(listed == 17);
    int sum = 0;
    for (auto& r : t.reducible) sum += r.count;
    int totals = 0;
    for (auto& [c, n] : t.reducible_totals) totals += n;
    CHECK(sum == totals);
    for (auto& e : t.enumeration) {
        int s = 0;
        for (auto& [n, k] : e.by_n) s += k;
        CHECK(s == e.total);
    }
    for (auto& l : t.chiral) CHECK(t.row(l));
    for (auto& l : t.survivors) CHECK(t.row(l));
}

TEST_CASE("census table fixtures carry their A4 values") {
    auto a4 = alternating_group(4);
    const auto& t = expected_tables();
    auto fx = table1();
    CHECK(fx.size() == t.ks.size());
    for (auto& r : t.ks) {
        CAPTURE(r.label);
        REQUIRE(fx.count(r.label));
        auto& d = fx[r.label];
        CHECK(ks(d, a4).count == r.a4);
        CHECK(component_count(d) == r.n);
        CHECK(d.crossing_count() <= 6);
        CHECK(components_type(d, a4) == r.components);
    }
}

TEST_CASE("labels come from invariants") {
    auto a4 = alternating_group(4);
    auto fx = table1();
    for (auto& label : {"6_2", "6_4", "6_11", "6_14", "6_9"}) {
        auto e = make_entry(fx[label], "fixture", a4, nullptr);
        CHECK(match_label(e, expected_tables()) == label);
    }
    auto fake = make_entry(fx["fake 6_11"], "fixture", a4, nullptr);
    CHECK(match_label(fake, expected_tables()).empty());
}

TEST_CASE("report round trip and verification") {
    auto r = reference();
    std::ostringstream a;
    write_report(a, r);
    std::istringstream in(a.str());
    auto back = read_report(in);
    std::ostringstream b;
    write_report(b, back);
    CHECK(a.str() == b.str());

    auto v = verify(r);
    CHECK(v.pass);
    CHECK_FALSE(v.partial);
    CHECK(v.diffs.empty());
    CHECK(v.notes.size() == 4);
}

TEST_CASE("verification catches a perturbed entry") {
    auto a4 = alternating_group(4);
    auto r = reference();
    auto fx = table1();
    for (auto& e : r.entries)
        if (e.label == "6_11") {
            auto fake = make_entry(fx["fake 6_11"], "perturbed", a4, nullptr);
            e.ks_a4 = fake.ks_a4;
        }
    auto v = verify(r);
    CHECK_FALSE(v.pass);
    bool found = false;
    for (auto& d : v.diffs) found = found || d == "6_11: ks_a4 694 != 486";
    CHECK(found);
}

TEST_CASE("missing A5 column gives a partial pass") {
    auto r = reference();
    r.has_a5 = false;
    for (auto& e : r.entries) e.ks_a5.reset();
    auto v = verify(r);
    CHECK(v.pass);
    CHECK(v.partial);
}

TEST_CASE("a deviation that does not match its record is a failure") {
    auto r = reference();
    for (auto& row : r.order1)
        if (row.label() == "unknot o K4a1#Hopf") row.count = 3;
    CHECK_FALSE(verify(r).pass);
}

TEST_CASE("reports need their header") {
    std::istringstream empty("");
    CHECK_THROWS(read_report(empty));
    std::istringstream wrong("{\"format\":\"other\",\"version\":1}\n");
    CHECK_THROWS(read_report(wrong));
    std::istringstream future("{\"format\":\"hlc-census-report\",\"version\":9}\n");
    CHECK_THROWS(read_report(future));
}

TEST_CASE("configuration file") {
    std::string path = "/tmp/hlc_census_test.toml";
    {
        std::ofstream f(path);
        f << "[census]\nworkers = 3\nfixture_dir = \"fx\"\n[budgets]\nmeet_states = 1234\n[groups]\na5 = \"\"\n";
    }
    auto c = load_census_config(path);
    CHECK(c.workers == 3);
    CHECK(c.meet_states == 1234);
    CHECK(c.fixture_dir == "/tmp/fx");
    CHECK(c.group_a5.empty());
    CHECK(c.max_quad == 6);
    {
        std::ofstream f(path);
        f << "[census\n";
    }
    CHECK_THROWS(load_census_config(path));
    CensusConfig bad;
    bad.max_quad = 7;
    CHECK_THROWS(run_pipeline(bad));
}
