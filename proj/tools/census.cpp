#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlc/census.hpp"
#include "hlc/fixtures.hpp"
#include "hlc/invariants.hpp"
#include "hlc/sums.hpp"

using namespace hlc;
using nlohmann::json;

namespace {

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot write " + path);
        os = &file;
    }
    std::ostream& operator*() { return *os; }
};

// FILE or FILE:N, the first diagram of the file and an optional integer site
std::pair<Diagram, int> diagram_and_site(const std::string& arg) {
    std::string path = arg;
    int site = -1;
    auto colon = arg.rfind(':');
    if (colon != std::string::npos && colon + 1 < arg.size() &&
        arg.find_first_not_of("0123456789", colon + 1) == std::string::npos) {
        path = arg.substr(0, colon);
        site = std::stoi(arg.substr(colon + 1));
    }
    auto ds = read_diagram_file(path);
    if (ds.empty()) throw std::runtime_error(path + ": no diagrams");
    return {ds.front().d, site};
}

int cmd_enumerate(int quad, bool no_dedup, bool as_json, const std::string& out) {
    if (quad < 0 || quad > 6) throw std::invalid_argument("--quad must be in 0..6");
    auto gs = enumerate_plane_graphs(quad, EnumOptions{!no_dedup});
    Output o(out);
    if (as_json) {
        json arr = json::array();
        for (auto& g : gs) arr.push_back(to_json(g));
        *o << json{{"format", "hlc-plane-graphs"}, {"version", 1}, {"quad", quad}, {"graphs", arr}}.dump(1) << "\n";
    } else {
        *o << "# hlc-plane-graphs v1\n";
        for (auto& g : gs) *o << to_text(g) << "\n";
    }
    std::cerr << gs.size() << " plane graphs with " << quad << " quadrivalent vertices\n";
    return 0;
}

int cmd_diagrams(int quad, bool links_only, const std::string& out) {
    if (quad < 0 || quad > 6) throw std::invalid_argument("--quad must be in 0..6");
    std::vector<NamedDiagram> ds;
    int gi = 0;
    for (auto& g : enumerate_plane_graphs(quad)) {
        int k = 0;
        for (auto& d : assign_crossings(g)) {
            if (!links_only || component_count(d) >= 2)
                ds.push_back({"q" + std::to_string(quad) + "g" + std::to_string(gi) + "s" + std::to_string(k), d});
            ++k;
        }
        ++gi;
    }
    Output o(out);
    write_diagrams(*o, ds);
    std::cerr << ds.size() << " diagrams\n";
    return 0;
}

int cmd_reduce(const std::string& in, const std::string& moves, int max_crossings, std::size_t max_states,
               const std::string& out) {
    MoveSet ms = moves == "r" ? kRMoves : moves == "rih" ? kRIHMoves : 0;
    if (!ms) throw std::invalid_argument("--moves must be r or rih");
    auto named = read_diagram_file(in);
    std::vector<Diagram> seeds;
    for (auto& nd : named) seeds.push_back(nd.d);
    auto res = reduce_batch(seeds, Budget{max_crossings, max_states}, ms);
    Output o(out);
    std::map<std::string, int> tally;
    for (size_t i = 0; i < res.size(); ++i) {
        auto& r = res[i];
        json j{{"name", named[i].name}, {"verdict", verdict_name(r.verdict)}, {"states", r.states}};
        if (r.verdict == Verdict::ReducedTo) {
            j["reached"] = to_code(r.reached);
            json path = json::array();
            for (auto& m : r.path) path.push_back(describe(m));
            j["path"] = path;
        }
        if (r.class_id >= 0) j["class"] = r.class_id;
        *o << j.dump() << "\n";
        tally[verdict_name(r.verdict)]++;
    }
    for (auto& [k, v] : tally) std::cerr << k << ": " << v << "\n";
    return 0;
}

int cmd_invariant(const std::string& in, const std::string& group, const std::string& kill, const std::string& linking,
                  const std::string& out) {
    GroupTable g = group_from_spec(group);
    int la = -1, lb = -1;
    if (!linking.empty()) {
        char comma;
        std::istringstream ls(linking);
        if (!(ls >> la >> comma >> lb) || comma != ',') throw std::invalid_argument("--linking expects A,B");
    }
    if (!kill.empty() && kill != "m.l" && kill != "m.linv") throw std::invalid_argument("--kill must be m.l or m.linv");
    json rows = json::array();
    for (auto& nd : read_diagram_file(in)) {
        auto p = presentation_from_diagram(nd.d);
        json j{{"name", nd.name}, {"code", to_code(nd.d)}, {"group", g.name}, {"c", nd.d.crossing_count()},
               {"n", component_count(nd.d)}, {"ks", count_hom_classes(p, g)}, {"rank_bound", tietze_simplify(p).gens}};
        if (!kill.empty()) {
            json per = json::array();
            auto comps = trace_components(nd.d);
            for (int c = 0; c < comps.count; ++c) {
                if (comps.trivalent[c] || comps.free_loop[c]) continue;
                auto [m, l] = peripheral_words(nd.d, c);
                Word w = kill == "m.l" ? concat(m, l) : concat(m, inverse(l));
                per.push_back({{"component", c}, {"classes", count_constrained_classes(p, g, w)}});
            }
            j["kill_" + kill] = per;
        }
        if (la >= 0) {
            auto lm = linking_matrix(nd.d, la, lb);
            j["linking"] = {{"entries", lm.entries}, {"divisors", lm.divisors}};
        }
        rows.push_back(j);
    }
    Output o(out);
    *o << json{{"format", "hlc-invariants"}, {"version", 1}, {"rows", rows}}.dump(1) << "\n";
    return 0;
}

int cmd_sum(int order, const std::string& left, const std::string& right, bool flip, const std::string& out) {
    auto [d1, s1] = diagram_and_site(left);
    auto [d2, s2] = diagram_and_site(right);
    Diagram r;
    if (order == 1) {
        r = order1_sum(d1, std::max(s1, 0), d2, std::max(s2, 0));
    } else if (order == 2) {
        auto e1 = edge_sites(d1), e2 = edge_sites(d2);
        EdgeSite a = s1 >= 0 ? EdgeSite{s1} : e1.front();
        EdgeSite b = s2 >= 0 ? EdgeSite{s2} : e2.front();
        r = order2_sum(d1, a, d2, b, flip);
    } else {
        throw std::invalid_argument("--order must be 1 or 2");
    }
    Output o(out);
    write_diagrams(*o, {{"sum", r}});
    return 0;
}

int cmd_composites(int max_crossings, const std::string& dir, int workers) {
    auto a4 = alternating_group(4), a5 = alternating_group(5);
    auto pool = load_link_pool(dir + "/links.toml");
    auto graphs = load_pool(dir + "/graphs.hlc");
    std::vector<PoolEntry> links;
    for (auto& l : pool)
        if (l.d && l.family == l.name && l.name.find('#') == std::string::npos && l.crossings > 0 && l.crossings <= 4)
            links.push_back({l.name, *l.d});
    auto models = enumerate_order1_census(pool, 6).models;
    CompositeOptions opt;
    opt.max_crossings = max_crossings;
    opt.workers = workers;
    auto rep = enumerate_composites(graphs, links, a4, a5, models, opt);
    for (auto& cl : rep.classes) {
        auto& r = rep.candidates[cl.representative];
        std::cout << cl.inv.describe() << "  members=" << cl.members.size() << "  irreducible: " << cl.irreducibility
                  << "  non-split: " << cl.nonsplit << "\n    " << r.trace << "\n    " << to_code(r.d) << "\n";
    }
    std::cout << rep.classes.size() << " classes from " << rep.candidates.size() << " candidates\n";
    return 0;
}

int report_verdict(const CensusReport& r) {
    auto v = verify(r);
    for (auto& d : v.diffs) std::cout << "DIFF " << d << "\n";
    for (auto& n : v.notes) std::cout << "NOTE " << n << "\n";
    std::cout << "verify: " << (v.pass ? (v.partial ? "pass (partial: A5 column missing)" : "pass") : "FAIL") << "\n";
    return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"handlebody link census"};
    app.require_subcommand(1);

    int quad = 0;
    bool no_dedup = false, as_json = false, links_only = false;
    std::string out;
    auto* en = app.add_subcommand("enumerate", "plane graphs with two trivalent vertices");
    en->add_option("--quad", quad, "number of quadrivalent vertices")->required();
    en->add_flag("--no-mirror-dedup", no_dedup, "keep mirror-image pairs apart");
    en->add_flag("--json", as_json, "JSON instead of the text format");
    en->add_option("--out", out, "output file (default stdout)");

    auto* di = app.add_subcommand("diagrams", "all crossing assignments of the plane graphs");
    di->add_option("--quad", quad, "number of crossings")->required();
    di->add_flag("--links-only", links_only, "keep diagrams with at least two components");
    di->add_option("--out", out, "output file");

    std::string in, moves = "rih";
    int max_crossings = -1;
    std::size_t max_states = 5'000'000;
    auto* re = app.add_subcommand("reduce", "move search for a smaller or decomposed diagram");
    re->add_option("--in", in, "diagram file")->required();
    re->add_option("--moves", moves, "r or rih");
    re->add_option("--max-crossings", max_crossings, "crossing cap (default: crossings + 2)");
    re->add_option("--max-states", max_states, "state cap per seed");
    re->add_option("--out", out, "output file (JSON lines)");

    std::string group = "a4", kill, linking;
    auto* iv = app.add_subcommand("invariant", "Kitano-Suzuki counts, peripheral counts, linking matrices");
    iv->add_option("--in", in, "diagram file")->required();
    iv->add_option("--group", group, "a4, a5, s4 or file:PATH");
    iv->add_option("--kill", kill, "m.l or m.linv");
    iv->add_option("--linking", linking, "component pair A,B");
    iv->add_option("--out", out, "output file");

    int order = 2;
    std::string left, right;
    bool flip = false;
    auto* su = app.add_subcommand("sum", "order-1 or order-2 connected sum");
    su->add_option("--order", order, "1 or 2")->required();
    su->add_option("--left", left, "FILE[:site]")->required();
    su->add_option("--right", right, "FILE[:site]")->required();
    su->add_flag("--flip", flip, "other gluing orientation (order 2)");
    su->add_option("--out", out, "output file");

    std::string fixtures = "fixtures";
    int workers = 1;
    int comp_max = 6;
    auto* co = app.add_subcommand("composites", "composite links from the graph and link pools");
    co->add_option("--max-crossings", comp_max, "crossing budget");
    co->add_option("--fixtures", fixtures, "fixture directory");
    co->add_option("--workers", workers, "threads");

    std::string config = "census.toml", report_path, summary_path, table_out;
    int run_workers = 0;
    auto* ru = app.add_subcommand("run", "full pipeline, report and verification");
    ru->add_option("--config", config, "TOML configuration");
    ru->add_option("--report", report_path, "JSON lines report (default stdout)");
    ru->add_option("--summary", summary_path, "human-readable summary table");
    ru->add_option("--write-fixtures", table_out, "also write the census table and comparison diagrams");
    ru->add_option("--workers", run_workers, "override the configured thread count");

    auto* ve = app.add_subcommand("verify", "compare a report with the expected tables");
    ve->add_option("--report", report_path, "JSON lines report")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*en) return cmd_enumerate(quad, no_dedup, as_json, out);
        if (*di) return cmd_diagrams(quad, links_only, out);
        if (*re) return cmd_reduce(in, moves, max_crossings, max_states, out);
        if (*iv) return cmd_invariant(in, group, kill, linking, out);
        if (*su) return cmd_sum(order, left, right, flip, out);
        if (*co) return cmd_composites(comp_max, fixtures, workers);
        if (*ru) {
            auto cfg = load_census_config(config);
            if (run_workers > 0) cfg.workers = run_workers;
            auto rep = run_pipeline(cfg, &std::cerr);
            {
                Output o(report_path);
                write_report(*o, rep);
            }
            if (!summary_path.empty()) {
                Output s(summary_path);
                summary_table(*s, rep);
            }
            if (!table_out.empty()) {
                auto fx = comparison_fixtures(rep, load_pool(cfg.fixture_dir + "/graphs.hlc"), group_from_spec(cfg.group_a4),
                                              alternating_group(5), &std::cerr);
                Output t(table_out);
                write_diagrams(*t, fx);
            }
            if (report_path.empty() || report_path == "-") {
                auto v = verify(rep);
                std::cerr << "verify: " << (v.pass ? "pass" : "FAIL") << "\n";
                return v.pass ? 0 : 1;
            }
            return report_verdict(rep);
        }
        if (*ve) return report_verdict(read_report_file(report_path));
    } catch (const std::exception& e) {
        std::cerr << "census: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
