#include "hlc/fixtures.hpp"

#include <stdexcept>

#include <toml.hpp>

namespace hlc {

std::vector<LinkPoolEntry> load_link_pool(const std::string& path) {
    toml::table tbl;
    try {
        tbl = toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        throw std::runtime_error("link pool " + path + ": " + std::string(e.description()));
    }
    std::vector<LinkPoolEntry> out;
    auto* links = tbl["link"].as_array();
    if (!links) throw std::runtime_error("link pool " + path + ": no [[link]] entries");
    for (auto& node : *links) {
        auto* t = node.as_table();
        if (!t) throw std::runtime_error("link pool " + path + ": [[link]] must be a table");
        LinkPoolEntry e;
        e.name = (*t)["name"].value_or(std::string{});
        if (e.name.empty()) throw std::runtime_error("link pool " + path + ": entry without a name");
        e.family = (*t)["family"].value_or(e.name);
        e.chiral = (*t)["chiral"].value_or(false);
        if (auto code = (*t)["code"].value<std::string>()) {
            e.d = diagram_from_code(*code);
        } else if (auto* br = (*t)["braid"].as_array()) {
            std::vector<int> w;
            for (auto& x : *br) w.push_back(static_cast<int>(x.value_or(0)));
            if (w.empty()) throw std::runtime_error("link pool " + path + ": empty braid for " + e.name);
            int strands = w.front();
            w.erase(w.begin());
            e.d = braid_closure(strands, w);
        }
        if (e.d) {
            e.crossings = e.d->crossing_count();
            e.components = component_count(*e.d);
        } else {
            e.crossings = (*t)["crossings"].value_or(-1);
            e.components = (*t)["components"].value_or(-1);
            if (e.crossings < 0 || e.components < 1)
                throw std::runtime_error("link pool " + path + ": " + e.name + " needs a diagram or crossings/components");
        }
        if (auto* orb = (*t)["orbits"].as_array()) {
            std::vector<char> hit(e.components, 0);
            for (auto& o : *orb) {
                std::vector<int> cls;
                if (auto* a = o.as_array())
                    for (auto& x : *a) cls.push_back(static_cast<int>(x.value_or(-1)));
                for (int c : cls) {
                    if (c < 0 || c >= e.components || hit[c])
                        throw std::runtime_error("link pool " + path + ": bad orbit data for " + e.name);
                    hit[c] = 1;
                }
                if (cls.empty()) throw std::runtime_error("link pool " + path + ": empty orbit for " + e.name);
                e.orbits.push_back(cls);
            }
            for (char h : hit)
                if (!h) throw std::runtime_error("link pool " + path + ": orbits of " + e.name + " miss a component");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<PoolEntry> load_pool(const std::string& path) {
    std::vector<PoolEntry> out;
    for (auto& nd : read_diagram_file(path)) out.push_back({nd.name, nd.d});
    return out;
}

CensusConfig load_census_config(const std::string& path) {
    toml::table tbl;
    try {
        tbl = toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        throw std::runtime_error("config " + path + ": " + std::string(e.description()));
    }
    CensusConfig c;
    auto census = tbl["census"];
    c.max_quad = census["max_quad"].value_or(c.max_quad);
    c.workers = census["workers"].value_or(c.workers);
    c.fixture_dir = census["fixture_dir"].value_or(c.fixture_dir);
    auto budgets = tbl["budgets"];
    c.reduce_states = budgets["reduce_states"].value_or(static_cast<int64_t>(c.reduce_states));
    c.meet_states = budgets["meet_states"].value_or(static_cast<int64_t>(c.meet_states));
    c.achiral_states = budgets["achiral_states"].value_or(static_cast<int64_t>(c.achiral_states));
    c.composite_max_crossings = budgets["composite_max_crossings"].value_or(c.composite_max_crossings);
    c.max_link_summands = budgets["max_link_summands"].value_or(c.max_link_summands);
    c.order1_max_crossings = budgets["order1_max_crossings"].value_or(c.order1_max_crossings);
    auto groups = tbl["groups"];
    c.group_a4 = groups["a4"].value_or(c.group_a4);
    c.group_a5 = groups["a5"].value_or(c.group_a5);
    // a relative fixture directory is taken from the config file's location
    if (!c.fixture_dir.empty() && c.fixture_dir.front() != '/') {
        auto slash = path.find_last_of('/');
        if (slash != std::string::npos) c.fixture_dir = path.substr(0, slash + 1) + c.fixture_dir;
    }
    if (c.workers < 1) throw std::runtime_error("config " + path + ": workers must be at least 1");
    return c;
}

}  // namespace hlc
