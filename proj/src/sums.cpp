#include "hlc/sums.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hlc {

namespace {

// copy g's vertices into out; returns the vertex offset
int append(PlaneGraph& out, const PlaneGraph& g) {
    int off = out.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.deg[v]);
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && s < g.link[s]) out.join(s + 4 * off, g.link[s] + 4 * off);
    return off;
}

bool valid_edge(const Diagram& d, EdgeSite e) {
    return e.slot >= 0 && e.slot < d.g.slot_count() && d.g.used(e.slot);
}

}  // namespace

std::vector<EdgeSite> edge_sites(const Diagram& d) {
    std::vector<EdgeSite> out;
    for (int s = 0; s < d.g.slot_count(); ++s)
        if (d.g.used(s) && s < d.g.link[s]) out.push_back({s});
    return out;
}

Diagram order2_sum(const Diagram& d1, EdgeSite s1, const Diagram& d2, EdgeSite s2, bool flip) {
    if (!valid_edge(d1, s1) || !valid_edge(d2, s2)) throw std::invalid_argument("order2_sum: invalid edge site");
    Diagram out;
    out.free_loops = d1.free_loops + d2.free_loops;
    append(out.g, d1.g);
    int off = append(out.g, d2.g);
    int a = s1.slot, b = d1.g.link[a];
    int c = s2.slot + 4 * off, e = d2.g.link[s2.slot] + 4 * off;
    if (flip) std::swap(c, e);
    out.g.link[a] = out.g.link[b] = out.g.link[c] = out.g.link[e] = -1;
    out.g.join(a, c);
    out.g.join(b, e);
    return out;
}

Diagram order1_sum(const Diagram& d1, int c1, const Diagram& d2, int c2) {
    auto k1 = trace_components(d1), k2 = trace_components(d2);
    if (c1 < 0 || c1 >= k1.count || c2 < 0 || c2 >= k2.count) throw std::invalid_argument("order1_sum: invalid component site");
    Diagram out;
    out.free_loops = d1.free_loops + d2.free_loops;
    append(out.g, d1.g);
    int off = append(out.g, d2.g);
    // new trivalent vertex on an edge of the chosen component (or on its free loop)
    auto attach = [&](const Diagram& d, const Components& k, int comp, int shift) {
        int v = out.g.add_vertex(3);
        if (k.free_loop[comp]) {
            out.free_loops--;
            out.g.join(slot(v, 0), slot(v, 1));
            return v;
        }
        int s = -1;
        for (int t = 0; t < d.g.slot_count() && s < 0; ++t)
            if (d.g.used(t) && k.of_slot[t] == comp) s = t;
        int a = s + 4 * shift, b = out.g.link[a];
        out.g.link[a] = out.g.link[b] = -1;
        out.g.join(a, slot(v, 0));
        out.g.join(b, slot(v, 1));
        return v;
    };
    int va = attach(d1, k1, c1, 0);
    int vb = attach(d2, k2, c2, off);
    out.g.join(slot(va, 2), slot(vb, 2));
    return out;
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw std::invalid_argument("braid_closure: need a strand");
    std::vector<int> cur(strands);
    for (int i = 0; i < strands; ++i) cur[i] = i + 1;
    int next = strands + 1;
    std::vector<std::array<int, 4>> xs;
    std::vector<char> touched(strands, 0);
    for (int l : word) {
        int i = std::abs(l) - 1;
        if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid_closure: letter out of range");
        int a = cur[i], b = cur[i + 1], c = next++, d = next++;
        // incoming a (left), b (right); outgoing c (left), d (right)
        if (l > 0) xs.push_back({a, b, d, c});
        else xs.push_back({b, d, c, a});
        cur[i] = c, cur[i + 1] = d;
        touched[i] = touched[i + 1] = 1;
    }
    std::ostringstream os;
    // closing arcs identify final labels with the initial ones
    auto rename = [&](int x) {
        for (int j = 0; j < strands; ++j)
            if (cur[j] == x) return j + 1;
        return x;
    };
    for (auto& x : xs) os << "X(" << rename(x[0]) << "," << rename(x[1]) << "," << rename(x[2]) << "," << rename(x[3]) << ") ";
    for (int j = 0; j < strands; ++j)
        if (!touched[j]) os << "O() ";
    return diagram_from_code(os.str());
}

}  // namespace hlc
