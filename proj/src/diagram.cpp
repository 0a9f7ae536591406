#include "hlc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace hlc {

Diagram resolve(const PlaneGraph& skeleton, unsigned over_mask) {
    Diagram d{skeleton, 0};
    int i = 0;
    for (int v = 0; v < skeleton.vertex_count(); ++v) {
        if (skeleton.deg[v] != 4) continue;
        if (over_mask >> i & 1u) d = flip_crossing(d, v);
        ++i;
    }
    return d;
}

std::vector<Diagram> assign_crossings(const PlaneGraph& skeleton) {
    int c = skeleton.count(4);
    if (c == 0) return {Diagram{skeleton, 0}};
    // the state of the first crossing is fixed: the other half are mirror images
    std::vector<Diagram> out;
    for (unsigned m = 0; m < (1u << (c - 1)); ++m) out.push_back(resolve(skeleton, m << 1));
    return out;
}

Diagram flip_crossing(const Diagram& d, int v) {
    Diagram r = d;
    r.g = rotate_vertex(d.g, v, 1);
    return r;
}

Diagram mirror(const Diagram& d) {
    Diagram r = d;
    for (int v = 0; v < d.g.vertex_count(); ++v)
        if (d.g.deg[v] == 4) r.g = rotate_vertex(r.g, v, 1);
    return r;
}

Diagram reflect(const Diagram& d) { return Diagram{reflect(d.g), d.free_loops}; }

Components trace_components(const Diagram& d) {
    const auto& g = d.g;
    int n = g.slot_count();
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    auto unite = [&](int a, int b) { par[find(a)] = find(b); };
    for (int s = 0; s < n; ++s) {
        if (!g.used(s)) continue;
        unite(s, g.link[s]);
        int v = vert_of(s);
        if (g.deg[v] == 4) unite(s, opposite(s));
        else unite(s, slot(v, 0));
    }
    Components c;
    c.of_slot.assign(n, -1);
    std::map<int, int> id;
    for (int s = 0; s < n; ++s) {
        if (!g.used(s)) continue;
        int r = find(s);
        auto it = id.find(r);
        if (it == id.end()) {
            it = id.emplace(r, c.count++).first;
            c.trivalent.push_back(0);
            c.free_loop.push_back(false);
        }
        c.of_slot[s] = it->second;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.deg[v] == 3) c.trivalent[c.of_slot[slot(v, 0)]]++;
    for (int i = 0; i < d.free_loops; ++i) {
        c.trivalent.push_back(0);
        c.free_loop.push_back(true);
        c.count++;
    }
    return c;
}

int component_count(const Diagram& d) { return trace_components(d).count; }

std::vector<int8_t> orientation(const Diagram& d) {
    const auto& g = d.g;
    std::vector<int8_t> o(g.slot_count(), 0);
    auto walk = [&](int s) {
        int start = s;
        while (true) {
            o[s] = 1;
            int t = g.link[s];
            o[t] = -1;
            if (g.deg[vert_of(t)] != 4) return;
            s = opposite(t);
            if (s == start) return;
        }
    };
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && g.deg[vert_of(s)] == 3 && o[s] == 0) walk(s);
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && o[s] == 0) walk(s);
    return o;
}

int crossing_sign(const Diagram& d, const std::vector<int8_t>& orient, int v) {
    (void)d;
    int i = orient[slot(v, 0)] < 0 ? 0 : 2;  // understrand arrives here
    int j = orient[slot(v, 1)] < 0 ? 1 : 3;  // overstrand arrives here
    return j == ((i + 3) & 3) ? 1 : -1;
}

namespace {

struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> e;
};

EdgeList vertex_edges(const PlaneGraph& g) {
    EdgeList el;
    el.n = g.vertex_count();
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && s < g.link[s]) el.e.emplace_back(vert_of(s), vert_of(g.link[s]));
    return el;
}

}  // namespace

int diagram_connectivity(const Diagram& d) {
    int n = d.g.vertex_count();
    if (d.free_loops > 0) return 0;
    if (n == 0) return 0;
    if (d.g.connected_parts() > 1) return 0;
    auto el = vertex_edges(d.g);
    return edge_connectivity(el.n, el.e);
}

bool is_decomposed(const Diagram& d) {
    const auto& g = d.g;
    int n = g.vertex_count();
    if (d.free_loops > 0) return n > 0 || d.free_loops > 1;
    if (n == 0) return false;
    // bridge search by low-link over edge ids
    std::vector<int> tin(n, -1), low(n, 0);
    int timer = 0;
    bool bridge = false;
    std::function<void(int, int)> dfs = [&](int v, int via) {
        tin[v] = low[v] = timer++;
        for (int k = 0; k < g.deg[v]; ++k) {
            int s = slot(v, k);
            if (s == via) continue;  // the edge we arrived by
            int t = g.link[s];
            int w = vert_of(t);
            if (w == v) continue;
            if (tin[w] >= 0) {
                low[v] = std::min(low[v], tin[w]);
            } else {
                dfs(w, t);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > tin[v]) bridge = true;
            }
        }
    };
    dfs(0, -1);
    for (int v = 0; v < n; ++v)
        if (tin[v] < 0) return true;
    return bridge;
}

CanonicalCode diagram_code(const Diagram& d, bool up_to_mirror) {
    return canonical_code(d.g, CodeOptions{true, up_to_mirror}, d.free_loops);
}

std::string to_code(const Diagram& d) {
    const auto& g = d.g;
    std::vector<int> label(g.slot_count(), 0);
    int next = 1;
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && label[s] == 0) label[s] = label[g.link[s]] = next++;
    auto o = orientation(d);
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << (first ? "" : " ");
        first = false;
        if (g.deg[v] == 3) {
            os << "V(" << label[slot(v, 0)] << "," << label[slot(v, 1)] << "," << label[slot(v, 2)] << ")";
        } else {
            int st = o[slot(v, 0)] < 0 ? 0 : 2;
            os << "X(";
            for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label[slot(v, (st + k) & 3)];
            os << ")";
        }
    }
    for (int i = 0; i < d.free_loops; ++i) os << (first ? "" : " ") << "O()", first = false;
    return os.str();
}

Diagram diagram_from_code(const std::string& text) {
    static const std::regex tok(R"(([XVO])\(([^)]*)\))");
    Diagram d;
    std::map<int, std::vector<int>> where;
    size_t consumed = 0;
    bool any = false;
    auto stray = [&](size_t from, size_t to) {
        for (size_t i = from; i < to; ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i])))
                throw std::runtime_error("diagram code: unexpected text at offset " + std::to_string(i));
    };
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tok); it != std::sregex_iterator(); ++it) {
        stray(consumed, it->position());
        consumed = it->position() + it->length();
        any = true;
        char kind = (*it)[1].str()[0];
        std::string body = (*it)[2].str();
        if (kind == 'O') {
            d.free_loops++;
            continue;
        }
        std::vector<int> labels;
        std::stringstream bs(body);
        std::string x;
        while (std::getline(bs, x, ',')) labels.push_back(std::stoi(x));
        size_t want = kind == 'X' ? 4 : 3;
        if (labels.size() != want) throw std::runtime_error("diagram code: wrong arity in " + (*it)[0].str());
        int v = d.g.add_vertex(static_cast<int>(want));
        for (size_t k = 0; k < want; ++k) where[labels[k]].push_back(slot(v, static_cast<int>(k)));
    }
    stray(consumed, text.size());
    if (!any) throw std::runtime_error("diagram code: empty");
    for (auto& [lab, ss] : where) {
        if (ss.size() != 2) throw std::runtime_error("diagram code: label " + std::to_string(lab) + " must occur exactly twice");
        d.g.join(ss[0], ss[1]);
    }
    std::string why;
    if (!d.g.is_valid(&why)) throw std::runtime_error("diagram code: " + why);
    return d;
}

std::vector<NamedDiagram> read_diagrams(std::istream& in) {
    std::vector<NamedDiagram> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.rfind("# hlc-diagrams", 0) == 0) {
            if (line.find("v1") == std::string::npos) throw std::runtime_error("diagram file: unsupported version");
        }
        first = false;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        NamedDiagram nd;
        auto colon = line.find(':');
        std::string code = line;
        if (colon != std::string::npos) {
            nd.name = line.substr(0, colon);
            nd.name.erase(0, nd.name.find_first_not_of(" \t"));
            nd.name.erase(nd.name.find_last_not_of(" \t") + 1);
            code = line.substr(colon + 1);
        }
        nd.d = diagram_from_code(code);
        out.push_back(std::move(nd));
    }
    return out;
}

std::vector<NamedDiagram> read_diagram_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open diagram file " + path);
    return read_diagrams(f);
}

void write_diagrams(std::ostream& out, const std::vector<NamedDiagram>& ds) {
    out << "# hlc-diagrams v1\n";
    for (auto& nd : ds) {
        if (!nd.name.empty()) out << nd.name << ": ";
        out << to_code(nd.d) << "\n";
    }
}

}  // namespace hlc
