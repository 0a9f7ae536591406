#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hlc/census.hpp"
#include "hlc/fixtures.hpp"
#include "hlc/invariants.hpp"

#ifndef HLC_SOURCE_DIR
#define HLC_SOURCE_DIR "."
#endif

using namespace hlc;

namespace {

// every criterion compares exactly; the only numeric knobs are sample sizes and budgets
constexpr int kMoveSamples = 1000;
constexpr uint32_t kSeed = 20241019;

enum class Status { Pass, Fail, Recorded };

struct Outcome {
    Status status = Status::Fail;
    std::string detail;
};

std::string src(const std::string& rel) { return std::string(HLC_SOURCE_DIR) + "/" + rel; }

std::map<std::string, Diagram> table1() {
    std::map<std::string, Diagram> out;
    for (auto& nd : read_diagram_file(src("fixtures/table1.hlc"))) out[nd.name] = nd.d;
    return out;
}

int circle_of(const Diagram& d) {
    auto comps = trace_components(d);
    for (int c = 0; c < comps.count; ++c)
        if (comps.trivalent[c] == 0) return c;
    return -1;
}

struct Context {
    GroupTable a4 = alternating_group(4);
    GroupTable a5 = alternating_group(5);
    std::map<std::string, Diagram> fixtures = table1();
    CensusConfig config = load_census_config(src("census.toml"));
    std::optional<CensusReport> report;
    std::string report_text;

    const CensusReport& pipeline() {
        if (!report) {
            report = run_pipeline(config, nullptr);
            std::ostringstream os;
            write_report(os, *report);
            report_text = os.str();
        }
        return *report;
    }
};

Outcome enumeration_counts(Context&) {
    const auto& t = expected_tables();
    std::ostringstream got;
    bool ok = true;
    for (auto& want : t.enumeration) {
        std::map<int, int> by_n;
        int total = 0;
        for (auto& g : enumerate_plane_graphs(want.q)) by_n[component_count(Diagram{g, 0})]++, total++;
        ok = ok && by_n == want.by_n && total == want.total;
        got << " q" << want.q << "=" << total;
        if (want.q == 6) got << " (n split " << by_n[1] << "/" << by_n[2] << "/" << by_n[3] << ")";
    }
    return {ok ? Status::Pass : Status::Fail, "totals" + got.str()};
}

Outcome burnside(Context& c) {
    uint64_t x = burnside_free_hom_classes(c.a4, 3), y = burnside_free_hom_classes(c.a5, 3);
    const auto* row = expected_tables().row("split");
    bool ok = x == row->a4 && y == *row->a5;
    return {ok ? Status::Pass : Status::Fail, "A4 rank 3: " + std::to_string(x) + ", A5 rank 3: " + std::to_string(y)};
}

Outcome ks_regression(Context& c) {
    int cells = 0;
    std::vector<std::string> bad;
    for (auto& row : expected_tables().ks) {
        auto it = c.fixtures.find(row.label);
        if (it == c.fixtures.end()) {
            bad.push_back(row.label + " missing");
            continue;
        }
        auto p = presentation_from_diagram(it->second);
        uint64_t a4 = count_hom_classes(p, c.a4);
        ++cells;
        if (a4 != row.a4) bad.push_back(row.label + " A4 " + std::to_string(a4));
        if (row.a5) {
            uint64_t a5 = count_hom_classes(p, c.a5);
            ++cells;
            if (a5 != *row.a5) bad.push_back(row.label + " A5 " + std::to_string(a5));
        }
    }
    std::string d = std::to_string(cells) + " cells over " + std::to_string(expected_tables().ks.size()) + " rows";
    for (auto& b : bad) d += "; " + b;
    return {bad.empty() ? Status::Pass : Status::Fail, d};
}

Outcome rank_bounds(Context& c) {
    std::vector<std::string> bad;
    std::ostringstream ranks;
    for (auto& row : expected_tables().ks) {
        if (!row.rank) continue;
        int r = tietze_simplify(presentation_from_diagram(c.fixtures.at(row.label))).gens;
        ranks << " " << row.label << ":" << r;
        bool ok = row.rank->at_most ? r <= row.rank->value : r == row.rank->value;
        if (!ok) bad.push_back(row.label + " gives " + std::to_string(r));
    }
    std::string d = "generators" + ranks.str();
    for (auto& b : bad) d += "; " + b;
    return {bad.empty() ? Status::Pass : Status::Fail, d};
}

Outcome irreducibility(Context&) {
    std::vector<std::string> bad;
    std::string pattern;
    auto cond = [](const IrreducibilityVerdict& v, const std::string& name) {
        for (auto& c : v.conditions)
            if (c.name == name) return c.divisible;
        return false;
    };
    for (auto& row : expected_tables().ks) {
        if (!row.listed) continue;
        auto v = irreducibility_test(row.a4, row.a5, row.n, row.rank->value);
        bool irr = v.conclusion == Conclusion::Irreducible;
        if (row.label == "6_9") {
            bool ok = !irr && cond(v, "link2(p=0)");
            if (!ok) bad.push_back("6_9 pattern");
            pattern += " 6_9: inconclusive, link2(p=0) divisible;";
        } else if (row.label == "6_12") {
            bool ok = !irr && cond(v, "unknot-A4") && !cond(v, "unknot-A5");
            if (!ok) bad.push_back("6_12 pattern");
            pattern += " 6_12: unknot condition divisible in A4, not in A5, inconclusive (" + v.reason + ");";
        } else if (!irr) {
            bad.push_back(row.label + " " + v.reason);
        }
    }
    std::string d = "15 entries irreducible;" + pattern;
    for (auto& b : bad) d += " FAILED " + b;
    return {bad.empty() ? Status::Pass : Status::Fail, d};
}

Outcome survivors(Context& c) {
    auto& r = c.pipeline();
    bool ok = true;
    std::ostringstream d;
    for (auto& s : r.survivors) {
        if (s.inconclusive) ok = false;
        if (s.q <= 5 && s.reduced != s.seeds) ok = false;
    }
    auto q6 = std::find_if(r.survivors.begin(), r.survivors.end(), [](auto& s) { return s.q == 6; });
    if (q6 == r.survivors.end()) return {Status::Fail, "no q=6 stage"};
    std::multiset<std::pair<uint64_t, uint64_t>> got, want{{90, 600}, {106, 689}, {90, 469}, {310, 1841}};
    for (auto& e : r.entries)
        if (e.provenance.rfind("enumerated", 0) == 0) got.insert({e.ks_a4, e.ks_a5.value_or(0)});
    ok = ok && q6->classes == 4 && got == want;
    int seeds5 = 0;
    for (auto& s : r.survivors)
        if (s.q <= 5) seeds5 += s.seeds;
    d << seeds5 << " diagrams at c<=5 all reduced; c=6: " << q6->survivors << " of " << q6->seeds << " survive in "
      << q6->classes << " classes, KS";
    for (auto& [a, b] : got) d << " (" << a << "," << b << ")";
    return {ok ? Status::Pass : Status::Fail, d.str()};
}

Outcome composites(Context& c) {
    auto& r = c.pipeline();
    const auto& t = expected_tables();
    std::set<std::string> labels;
    std::vector<std::string> bad;
    int g41 = 0;
    for (auto& e : r.entries) {
        if (e.provenance.rfind("composite", 0) != 0) continue;
        if (e.label.empty()) {
            bad.push_back("unlabelled class A4=" + std::to_string(e.ks_a4));
            continue;
        }
        labels.insert(e.label);
        if (e.nonsplit == "open") bad.push_back(e.label + " not certified non-split");
        if (e.irreducible == "open" && e.label != "6_12") bad.push_back(e.label + " not certified irreducible");
        if (e.provenance.rfind("composite(G4_1[", 0) == 0 && e.provenance.find("# Hopf") != std::string::npos &&
            (e.label == "6_4" || e.label == "6_5"))
            ++g41;
    }
    std::vector<std::string> want = {"4_1", "5_1", "6_4", "6_5", "6_6", "6_7", "6_8", "6_10", "6_11", "6_12", "6_13", "6_14"};
    for (auto& w : want)
        if (!labels.count(w)) bad.push_back(w + " missing");
    if (g41 != 2) bad.push_back("G4_1 # Hopf does not split into 6_4 and 6_5");
    std::vector<std::string> extra;
    for (auto& l : labels)
        if (std::find(want.begin(), want.end(), l) == want.end()) extra.push_back(l);
    std::ostringstream d;
    d << r.composites.classes << " classes from " << r.composites.candidates << " sums;";
    for (auto& l : labels) d << " " << l;
    d << "; G4_1 # Hopf -> 6_4, 6_5";
    for (auto& b : bad) d << "; FAILED " << b;
    if (!bad.empty()) return {Status::Fail, d.str()};
    if (r.composites.classes == static_cast<int>(t.composite_list.size()) && extra.empty()) return {Status::Pass, d.str()};
    std::string obs = std::to_string(r.composites.classes) + " (";
    for (auto& x : extra) obs += "+" + x;
    obs += ")";
    auto* dev = t.deviation("composite-list");
    if (dev && dev->observed == obs)
        return {Status::Recorded, d.str() + "; expected exactly " + dev->expected + ", extra class " + extra.front() +
                                      ": " + dev->reason};
    return {Status::Fail, d.str() + "; unexpected class count " + obs};
}

Outcome reducible(Context& c) {
    const auto& t = expected_tables();
    auto pool = load_link_pool(src("fixtures/links.toml"));
    auto census = enumerate_order1_census(pool, 6, &c.a4);
    std::vector<std::string> bad, recorded;
    for (auto& want : t.reducible) {
        auto it = std::find_if(census.rows.begin(), census.rows.end(), [&](auto& x) { return x.label() == want.label(); });
        if (it == census.rows.end()) bad.push_back(want.label() + " missing");
        else if (it->count != want.count || !it->annotated || !it->orbits_consistent || it->pairs_separated != it->pairs_built)
            bad.push_back(want.label() + " count " + std::to_string(it->count));
    }
    for (auto& row : census.rows) {
        bool known = std::any_of(t.reducible.begin(), t.reducible.end(), [&](auto& w) { return w.label() == row.label(); });
        if (known) continue;
        auto* dev = t.deviation("reducible:" + row.label());
        if (dev && dev->observed == std::to_string(row.count)) recorded.push_back(row.label() + " = " + std::to_string(row.count));
        else bad.push_back("extra row " + row.label());
    }
    std::ostringstream totals;
    for (auto& [cr, want] : t.reducible_totals) {
        int got = census.totals.count(cr) ? census.totals.at(cr) : 0;
        totals << " " << cr << ":" << got;
        if (got == want) continue;
        auto* dev = t.deviation("reducible-total:" + std::to_string(cr));
        if (dev && dev->observed == std::to_string(got))
            recorded.push_back("total at " + std::to_string(cr) + " is " + std::to_string(got) + ", expected " + dev->expected);
        else bad.push_back("total at " + std::to_string(cr));
    }
    std::string d = std::to_string(t.reducible.size()) + " reference rows reproduced; totals" + totals.str();
    for (auto& b : bad) d += "; FAILED " + b;
    if (!bad.empty()) return {Status::Fail, d};
    if (recorded.empty()) return {Status::Pass, d};
    for (auto& x : recorded) d += "; " + x;
    return {Status::Recorded, d + " (" + t.deviation("reducible-total:6")->reason + ")"};
}

Outcome chirality(Context& c) {
    std::vector<std::string> bad;
    auto& d63 = c.fixtures.at("6_3");
    auto r = chirality_test(d63, circle_of(d63), c.a5);
    if (!(r.n == 77 && r.rn == 111 && r.verdict == Chirality::Chiral)) bad.push_back("6_3 counts");
    int swaps = 0;
    for (auto& [label, d] : c.fixtures) {
        auto comps = trace_components(d);
        for (int k = 0; k < comps.count; ++k) {
            if (comps.trivalent[k] || comps.free_loop[k]) continue;
            auto x = chirality_test(d, k, c.a4);
            auto y = chirality_test(mirror(d), k, c.a4);
            ++swaps;
            if (x.n != y.rn || x.rn != y.n) bad.push_back("mirror swap fails on " + label);
        }
    }
    auto m = chirality_test(mirror(d63), circle_of(d63), c.a5);
    if (m.n != r.rn || m.rn != r.n) bad.push_back("A5 mirror swap on 6_3");
    auto& rep = c.pipeline();
    std::ostringstream routes;
    for (auto& e : rep.entries) {
        bool listed = std::count(expected_tables().chiral.begin(), expected_tables().chiral.end(), e.label) > 0;
        if (listed && e.chirality == "achiral-witnessed") bad.push_back(e.label + " witnessed achiral");
        if (!listed && e.chirality == "chiral") bad.push_back(e.label + " certified chiral");
        if (listed && e.label != "6_3") routes << "; " << e.label << " " << e.chirality << " (" << e.chirality_route << ")";
    }
    std::string d = "6_3 in A5: (N,rN) = (" + std::to_string(r.n) + "," + std::to_string(r.rn) + "); mirror swap on " +
                    std::to_string(swaps) + " circles" + routes.str();
    for (auto& b : bad) d += "; FAILED " + b;
    return {bad.empty() ? Status::Pass : Status::Fail, d};
}

Outcome properties(Context& c) {
    std::vector<std::string> bad;
    // (a) A4 counts under random moves, every kind represented
    std::vector<Diagram> pool;
    for (int q = 2; q <= 5; ++q)
        for (auto& g : enumerate_plane_graphs(q))
            for (auto& d : assign_crossings(g)) pool.push_back(d);
    for (auto& [label, d] : c.fixtures) pool.push_back(d);
    std::mt19937 rng(kSeed);
    std::map<MoveKind, std::vector<std::pair<int, MoveStep>>> by_kind;
    for (size_t i = 0; i < pool.size(); ++i)
        for (auto& s : enumerate_move_sites(pool[i], kRIHMoves, pool[i].crossing_count() + 2))
            by_kind[s.kind].push_back({static_cast<int>(i), s});
    std::vector<MoveKind> kinds;
    for (auto& [k, v] : by_kind) kinds.push_back(k);
    int moved = 0;
    std::map<MoveKind, int> per_kind;
    std::map<int, uint64_t> cache;
    for (int i = 0; i < kMoveSamples; ++i) {
        auto kind = kinds[i % kinds.size()];
        auto& sites = by_kind[kind];
        auto [di, step] = sites[rng() % sites.size()];
        auto e = apply_move(pool[di], step);
        if (!cache.count(di)) cache[di] = ks(pool[di], c.a4).count;
        if (ks(e, c.a4).count != cache[di]) bad.push_back("move " + describe(step) + " on " + to_code(pool[di]));
        ++moved;
        per_kind[kind]++;
    }
    if (per_kind.size() != 6) bad.push_back("only " + std::to_string(per_kind.size()) + " move kinds available");
    // (b) Burnside against direct orbit counting on every fixture and entry presentation
    int presentations = 0;
    std::vector<Diagram> census;
    for (auto& [label, d] : c.fixtures) census.push_back(d);
    for (auto& e : c.pipeline().entries) census.push_back(diagram_from_code(e.code));
    for (auto& d : census) {
        auto p = presentation_from_diagram(d);
        ++presentations;
        if (count_hom_classes_burnside(p, c.a4) != count_hom_classes_direct(p, c.a4)) bad.push_back("orbit count on " + to_code(d));
    }
    // (c) Euler characteristic of every generated plane graph
    int graphs = 0;
    for (int q = 0; q <= 6; ++q)
        for (auto& g : enumerate_plane_graphs(q)) {
            ++graphs;
            if (g.vertex_count() - g.edge_count() + g.face_count() != 2 * g.connected_parts()) bad.push_back("Euler fails");
        }
    // (d) the report does not depend on the worker count, and equals the stored one
    auto cfg = c.config;
    cfg.workers = 3;
    std::ostringstream other;
    write_report(other, run_pipeline(cfg, nullptr));
    if (other.str() != c.report_text) bad.push_back("report differs between 1 and 3 workers");
    std::ifstream stored(src("fixtures/census_report.jsonl"));
    std::stringstream ref;
    ref << stored.rdbuf();
    if (ref.str() != c.report_text) bad.push_back("report differs from fixtures/census_report.jsonl");
    std::ostringstream d;
    d << moved << " moves over " << per_kind.size() << " kinds;";
    for (auto& [k, n] : per_kind) d << " " << describe(MoveStep{k}).substr(0, 2) << ":" << n;
    d << "; " << presentations << " presentations; " << graphs << " plane graphs; reports identical for 1 and 3 workers";
    for (auto& b : bad) d << "; FAILED " << b;
    return {bad.empty() ? Status::Pass : Status::Fail, d.str()};
}

}  // namespace

int main() {
    Context ctx;
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome(Context&)> run;
    };
    std::vector<Criterion> all = {
        {1, "enumeration counts", enumeration_counts}, {2, "Burnside oracle", burnside},
        {3, "KS regression", ks_regression},           {4, "rank bounds", rank_bounds},
        {5, "irreducibility arithmetic", irreducibility}, {6, "move-search survivors", survivors},
        {7, "composite census", composites},           {8, "reducible census", reducible},
        {9, "chirality", chirality},                   {10, "property suites", properties},
    };
    int failed = 0, recorded = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(ctx);
        } catch (const std::exception& e) {
            o = {Status::Fail, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Recorded ? "FAIL (recorded deviation)" : "FAIL";
        std::ostringstream secs;
        secs.setf(std::ios::fixed);
        secs.precision(1);
        secs << s;
        std::cout << "criterion " << c.id << " [" << c.name << "] " << tag << ": " << o.detail << " [" << secs.str() << " s]"
                  << std::endl;
        if (o.status == Status::Fail) ++failed;
        if (o.status == Status::Recorded) ++recorded;
    }
    std::cout << (all.size() - failed - recorded) << " pass, " << recorded << " fail as recorded, " << failed
              << " fail unexpectedly" << std::endl;
    return failed ? 1 : 0;
}
