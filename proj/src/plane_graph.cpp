#include "hlc/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace hlc {

int PlaneGraph::add_vertex(int d) {
    deg.push_back(static_cast<uint8_t>(d));
    for (int k = 0; k < 4; ++k) link.push_back(-1);
    return vertex_count() - 1;
}

int PlaneGraph::count(int d) const {
    return static_cast<int>(std::count(deg.begin(), deg.end(), static_cast<uint8_t>(d)));
}

int PlaneGraph::edge_count() const {
    int darts = 0;
    for (auto d : deg) darts += d;
    return darts / 2;
}

int PlaneGraph::faces(std::vector<int>& face_of) const {
    face_of.assign(link.size(), -1);
    int f = 0;
    for (int s = 0; s < slot_count(); ++s) {
        if (!used(s) || face_of[s] >= 0) continue;
        int t = s;
        do {
            face_of[t] = f;
            t = phi(t);
        } while (t != s);
        ++f;
    }
    return f;
}

int PlaneGraph::face_count() const {
    std::vector<int> tmp;
    return faces(tmp);
}

int PlaneGraph::connected_parts() const {
    int n = vertex_count();
    std::vector<int> seen(n, 0);
    int parts = 0;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        ++parts;
        std::vector<int> st{v};
        seen[v] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int k = 0; k < deg[u]; ++k) {
                int w = vert_of(link[slot(u, k)]);
                if (!seen[w]) seen[w] = 1, st.push_back(w);
            }
        }
    }
    return parts;
}

bool PlaneGraph::is_valid(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (link.size() != deg.size() * 4) return fail("slot array size mismatch");
    for (int v = 0; v < vertex_count(); ++v)
        if (deg[v] != 3 && deg[v] != 4) return fail("vertex degree must be 3 or 4");
    for (int s = 0; s < slot_count(); ++s) {
        if (!used(s)) {
            if (link[s] != -1) return fail("unused slot is linked");
            continue;
        }
        int t = link[s];
        if (t < 0 || t >= slot_count() || !used(t)) return fail("dangling dart");
        if (t == s || link[t] != s) return fail("partner is not an involution");
    }
    return true;
}

bool PlaneGraph::is_spherical() const {
    std::vector<int> fo;
    int F = faces(fo);
    return vertex_count() - edge_count() + F == 2 * connected_parts();
}

// ---------------------------------------------------------------- canonical

namespace {

struct Coder {
    const PlaneGraph& g;
    CodeOptions opt;
    std::vector<int> label, first, order;
    std::vector<int16_t> best, cur;
    bool have_best = false;

    Coder(const PlaneGraph& graph, CodeOptions o) : g(graph), opt(o) {
        label.assign(g.vertex_count(), -1);
        first.assign(g.vertex_count(), -1);
    }

    int kind(int v, int f) const {
        if (g.deg[v] == 3) return 0;
        return opt.crossings ? 1 + (pos_of(f) & 1) : 1;
    }

    // BFS code from start dart s; returns false when it is known to exceed best
    bool run(int s, int dir) {
        for (int v : order) label[v] = -1;
        order.clear();
        cur.clear();
        int cmp = have_best ? 0 : -1;
        auto emit = [&](int x) {
            if (cmp == 0) {
                int b = best[cur.size()];
                if (x < b) cmp = -1;
                else if (x > b) return false;
            }
            cur.push_back(static_cast<int16_t>(x));
            return true;
        };
        int v0 = vert_of(s);
        label[v0] = 0;
        first[v0] = s;
        order.push_back(v0);
        for (size_t h = 0; h < order.size(); ++h) {
            int v = order[h], f = first[v], d = g.deg[v];
            if (!emit(kind(v, f))) return false;
            int k0 = pos_of(f);
            for (int i = 0; i < d; ++i) {
                int k = ((k0 + dir * i) % d + d) % d;
                int t = g.link[slot(v, k)];
                int w = vert_of(t);
                if (label[w] < 0) {
                    label[w] = static_cast<int>(order.size());
                    first[w] = t;
                    order.push_back(w);
                }
                int dw = g.deg[w];
                int rel = (((pos_of(t) - pos_of(first[w])) * dir) % dw + dw) % dw;
                if (!emit(label[w]) || !emit(rel)) return false;
            }
        }
        if (cmp < 0) {
            best = cur;
            have_best = true;
        }
        return true;
    }
};

}  // namespace

CanonicalCode canonical_code(const PlaneGraph& g, CodeOptions opt, int extra) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        parts.emplace_back();
        std::vector<int> st{v};
        comp[v] = static_cast<int>(parts.size()) - 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            parts.back().push_back(u);
            for (int k = 0; k < g.deg[u]; ++k) {
                int w = vert_of(g.link[slot(u, k)]);
                if (comp[w] < 0) comp[w] = comp[v], st.push_back(w);
            }
        }
    }
    std::vector<CanonicalCode> codes;
    for (auto& part : parts) {
        int c3 = 0, c4 = 0;
        for (int v : part) (g.deg[v] == 3 ? c3 : c4)++;
        int want = (c3 > 0 && (c3 <= c4 || c4 == 0)) ? 3 : 4;
        Coder cd(g, opt);
        for (int v : part) {
            if (g.deg[v] != want) continue;
            for (int k = 0; k < g.deg[v]; ++k) {
                cd.run(slot(v, k), 1);
                if (opt.reflect) cd.run(slot(v, k), -1);
            }
        }
        codes.push_back(cd.best);
    }
    std::sort(codes.begin(), codes.end());
    CanonicalCode out;
    out.push_back(static_cast<int16_t>(extra));
    out.push_back(static_cast<int16_t>(codes.size()));
    for (auto& c : codes) {
        out.push_back(static_cast<int16_t>(c.size()));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

PlaneGraph reflect(const PlaneGraph& g) {
    PlaneGraph r = g;
    auto m = [&](int s) {
        int v = vert_of(s), d = g.deg[v];
        return slot(v, (d - pos_of(s)) % d);
    };
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s)) r.link[m(s)] = static_cast<int16_t>(m(g.link[s]));
    return r;
}

PlaneGraph rotate_vertex(const PlaneGraph& g, int v, int shift) {
    PlaneGraph r = g;
    int d = g.deg[v];
    auto m = [&](int s) {
        if (vert_of(s) != v) return s;
        return slot(v, ((pos_of(s) - shift) % d + d) % d);
    };
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s)) r.link[m(s)] = static_cast<int16_t>(m(g.link[s]));
    return r;
}

PlaneGraph permute_vertices(const PlaneGraph& g, const std::vector<int>& perm) {
    PlaneGraph r;
    int n = g.vertex_count();
    r.deg.assign(n, 0);
    r.link.assign(4 * n, -1);
    for (int v = 0; v < n; ++v) r.deg[perm[v]] = g.deg[v];
    for (int s = 0; s < g.slot_count(); ++s) {
        if (!g.used(s)) continue;
        int t = g.link[s];
        r.link[slot(perm[vert_of(s)], pos_of(s))] = static_cast<int16_t>(slot(perm[vert_of(t)], pos_of(t)));
    }
    return r;
}

Hash128 hash_code(const CanonicalCode& c) {
    uint64_t a = 1469598103934665603ULL, b = 0x243f6a8885a308d3ULL;
    for (int16_t x : c) {
        uint64_t y = static_cast<uint16_t>(x);
        a = (a ^ y) * 1099511628211ULL;
        b += y + 0x9e3779b97f4a7c15ULL;
        b ^= b >> 31;
        b *= 0xbf58476d1ce4e5b9ULL;
        b ^= b >> 27;
    }
    return {a, b};
}

// ------------------------------------------------------------- connectivity

int edge_connectivity(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1) return 0;
    std::vector<std::vector<int>> cap0(n, std::vector<int>(n, 0));
    for (auto [u, v] : edges)
        if (u != v) cap0[u][v]++, cap0[v][u]++;
    int best = INT32_MAX;
    for (int t = 1; t < n; ++t) {
        auto cap = cap0;
        int flow = 0;
        while (true) {
            std::vector<int> par(n, -1);
            par[0] = 0;
            std::queue<int> q;
            q.push(0);
            while (!q.empty() && par[t] < 0) {
                int u = q.front();
                q.pop();
                for (int w = 0; w < n; ++w)
                    if (par[w] < 0 && cap[u][w] > 0) par[w] = u, q.push(w);
            }
            if (par[t] < 0) break;
            for (int w = t; w != 0; w = par[w]) cap[par[w]][w]--, cap[w][par[w]]++;
            ++flow;
            if (flow >= best) break;
        }
        best = std::min(best, flow);
        if (best == 0) break;
    }
    return best;
}

int edge_connectivity(const PlaneGraph& g) {
    std::vector<std::pair<int, int>> e;
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && s < g.link[s]) e.emplace_back(vert_of(s), vert_of(g.link[s]));
    return edge_connectivity(g.vertex_count(), e);
}

std::vector<DoubleArc> classify_double_arcs(const PlaneGraph& g) {
    std::vector<DoubleArc> out;
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int s = 0; s < g.slot_count(); ++s) {
        if (!g.used(s)) continue;
        int u = vert_of(s), v = vert_of(g.link[s]);
        if (u < v) by_pair[{u, v}].push_back(s);
    }
    for (auto& [uv, ss] : by_pair) {
        for (size_t i = 0; i < ss.size(); ++i)
            for (size_t j = i + 1; j < ss.size(); ++j) {
                int a = ss[i], b = ss[j];
                bool quad = g.deg[uv.first] == 4 && g.deg[uv.second] == 4;
                bool bigon = (g.phi(a) == g.link[b] && g.phi(g.link[b]) == a) ||
                             (g.phi(b) == g.link[a] && g.phi(g.link[a]) == b);
                out.push_back({uv.first, uv.second, a, b,
                               quad && bigon ? DoubleArcVerdict::BigonQuadri : DoubleArcVerdict::Forbidden});
            }
    }
    return out;
}

PlaneGraph theta_graph() {
    PlaneGraph g;
    g.add_vertex(3);
    g.add_vertex(3);
    g.join(slot(0, 0), slot(1, 0));
    g.join(slot(0, 1), slot(1, 2));
    g.join(slot(0, 2), slot(1, 1));
    return g;
}

// ---------------------------------------------------------------- enumerate

namespace {

struct Multigraph {
    int n = 0;
    std::vector<int> type;          // 3 or 4
    std::vector<std::vector<int>> m;  // multiplicities
};

int max_mult(const Multigraph& g, int i, int j) { return (g.type[i] == 4 && g.type[j] == 4) ? 2 : 1; }

bool is_planar_abstract(const Multigraph& g) {
    using namespace boost;
    using G = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
    G bg(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.m[i][j]) add_edge(i, j, bg);
    return boyer_myrvold_planarity_test(bg);
}

int multigraph_connectivity(const Multigraph& g) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            for (int k = 0; k < g.m[i][j]; ++k) e.emplace_back(i, j);
    return edge_connectivity(g.n, e);
}

// refinement colours followed by brute force over colour-class orderings
std::vector<int> canonical_matrix(const Multigraph& g) {
    int n = g.n;
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = g.type[i];
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            for (int j = 0; j < n; ++j)
                if (g.m[i][j]) nb.push_back(col[j] * 8 + g.m[i][j]);
            std::sort(nb.begin(), nb.end());
            sig[i] = {col[i]};
            sig[i].insert(sig[i].end(), nb.begin(), nb.end());
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> nc(n);
        for (int i = 0; i < n; ++i) nc[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[i]) - uniq.begin());
        int before = *std::max_element(col.begin(), col.end());
        bool same_partition = true;
        for (int i = 0; i < n && same_partition; ++i)
            for (int j = 0; j < n; ++j)
                if ((col[i] == col[j]) != (nc[i] == nc[j])) { same_partition = false; break; }
        col = nc;
        (void)before;
        if (same_partition) break;
    }
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return col[a] < col[b]; });
    // permutations within blocks of equal colour
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && col[verts[j]] == col[verts[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<int> best;
    std::vector<int> cur(n * n);
    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == blocks.size()) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) cur[i * n + j] = g.m[verts[i]][verts[j]];
            if (best.empty() || cur < best) best = cur;
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(verts.begin() + lo, verts.begin() + hi);
        do {
            rec(b + 1);
        } while (std::next_permutation(verts.begin() + lo, verts.begin() + hi));
    };
    rec(0);
    std::vector<int> out;
    for (int i = 0; i < n; ++i) out.push_back(col[verts[i]]);
    out.insert(out.end(), best.begin(), best.end());
    return out;
}

void generate_multigraphs(int q, const std::function<void(const Multigraph&)>& sink) {
    Multigraph g;
    g.n = q + 2;
    g.type.assign(g.n, 4);
    g.type[0] = g.type[1] = 3;
    g.m.assign(g.n, std::vector<int>(g.n, 0));
    std::vector<int> rem(g.n);
    for (int i = 0; i < g.n; ++i) rem[i] = g.type[i];
    // fill row i among columns j > i
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == g.n) {
            sink(g);
            return;
        }
        if (i == 2 && j == 3) {
            // quadrivalent vertices sorted by their adjacency to the trivalent pair
            for (int k = 3; k < g.n; ++k)
                if (std::make_pair(g.m[0][k], g.m[1][k]) > std::make_pair(g.m[0][k - 1], g.m[1][k - 1])) return;
        }
        if (j == g.n) {
            if (rem[i] == 0) rec(i + 1, i + 2);
            return;
        }
        int cap_after = 0;
        for (int k = j + 1; k < g.n; ++k) cap_after += std::min(rem[k], max_mult(g, i, k));
        int lim = std::min({rem[i], rem[j], max_mult(g, i, j)});
        for (int x = lim; x >= 0; --x) {
            if (rem[i] - x > cap_after) break;
            g.m[i][j] = g.m[j][i] = x;
            rem[i] -= x;
            rem[j] -= x;
            rec(i, j + 1);
            rem[i] += x;
            rem[j] += x;
        }
        g.m[i][j] = g.m[j][i] = 0;
    };
    rec(0, 1);
}

// vertex order in which every prefix is connected; keeps the planarity prune effective
Multigraph bfs_relabel(const Multigraph& g) {
    std::vector<int> order{0}, seen(g.n, 0);
    seen[0] = 1;
    for (size_t h = 0; h < order.size(); ++h)
        for (int j = 0; j < g.n; ++j)
            if (g.m[order[h]][j] && !seen[j]) seen[j] = 1, order.push_back(j);
    for (int j = 0; j < g.n; ++j)
        if (!seen[j]) order.push_back(j);
    Multigraph r = g;
    for (int i = 0; i < g.n; ++i) {
        r.type[i] = g.type[order[i]];
        for (int j = 0; j < g.n; ++j) r.m[i][j] = g.m[order[i]][order[j]];
    }
    return r;
}

bool double_arcs_ok(const PlaneGraph& g) {
    for (auto& da : classify_double_arcs(g))
        if (da.verdict == DoubleArcVerdict::Forbidden) return false;
    return true;
}

bool has_loop(const PlaneGraph& g) {
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && vert_of(g.link[s]) == vert_of(s)) return true;
    return false;
}

// every embedding of an abstract multigraph, kept if spherical and bigon-compliant
void embed_all(const Multigraph& mg, bool fix_first, std::set<CanonicalCode>& seen, std::vector<PlaneGraph>& out,
               CodeOptions copt) {
    int n = mg.n;
    // incidence: for each vertex, list of (edge id) ends; edge ends paired
    std::vector<std::vector<int>> ends(n);  // end ids
    std::vector<int> end_vertex, end_mate;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < mg.m[i][j]; ++k) {
                int a = static_cast<int>(end_vertex.size());
                end_vertex.push_back(i);
                end_vertex.push_back(j);
                end_mate.push_back(a + 1);
                end_mate.push_back(a);
                ends[i].push_back(a);
                ends[j].push_back(a + 1);
            }
    int E = static_cast<int>(end_vertex.size()) / 2;
    int target_faces = E - n + 2;
    // cyclic orders: first end fixed at position 0, permute the rest
    std::vector<std::vector<std::vector<int>>> orders(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> rest(ends[v].begin() + 1, ends[v].end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> o{ends[v][0]};
            o.insert(o.end(), rest.begin(), rest.end());
            orders[v].push_back(o);
            if (fix_first && v == 0) break;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::vector<int> pos(end_vertex.size()), choice(n, 0);
    std::vector<int> seen_end(end_vertex.size());
    int stamp = 0;
    // genus of the sub-map induced on vertices < upto (restricted rotations)
    std::vector<int> comp(n);
    auto induced_planar = [&](int upto) {
        ++stamp;
        int V = upto, E2 = 0, F = 0;
        auto inside = [&](int e) { return end_vertex[end_mate[e]] < upto; };
        auto prev_inside = [&](int t) {
            int w = end_vertex[t];
            auto& o = orders[w][choice[w]];
            int d = static_cast<int>(o.size());
            int p = pos[t];
            do {
                p = (p + d - 1) % d;
            } while (!inside(o[p]));
            return o[p];
        };
        for (int w = 0; w < upto; ++w) comp[w] = w;
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        int parts = upto;
        for (size_t e0 = 0; e0 < end_vertex.size(); ++e0) {
            if (end_vertex[e0] >= upto || !inside(static_cast<int>(e0))) continue;
            ++E2;
            int a = find(end_vertex[e0]), b = find(end_vertex[end_mate[e0]]);
            if (a != b) comp[a] = b, --parts;
            if (seen_end[e0] == stamp) continue;
            ++F;
            int e = static_cast<int>(e0);
            do {
                seen_end[e] = stamp;
                e = prev_inside(end_mate[e]);
            } while (e != static_cast<int>(e0));
        }
        // isolated vertices contribute a face each
        for (int w = 0; w < upto; ++w) {
            bool any = false;
            for (int e : ends[w]) any |= inside(e);
            if (!any) ++F;
        }
        return V - E2 / 2 + F == 2 * parts;
    };
    std::function<void(int)> rec = [&](int v) {
        if (v >= 3 && v < n && !induced_planar(v)) return;
        if (v == n) {
            // face count: phi(e) = prev(mate(e))
            ++stamp;
            int F = 0;
            for (size_t e0 = 0; e0 < end_vertex.size(); ++e0) {
                if (seen_end[e0] == stamp) continue;
                ++F;
                int e = static_cast<int>(e0);
                do {
                    seen_end[e] = stamp;
                    int t = end_mate[e];
                    int w = end_vertex[t];
                    auto& o = orders[w][choice[w]];
                    int d = static_cast<int>(o.size());
                    e = o[(pos[t] + d - 1) % d];
                } while (e != static_cast<int>(e0));
            }
            if (F != target_faces) return;
            PlaneGraph g;
            for (int w = 0; w < n; ++w) g.add_vertex(mg.type[w]);
            for (int w = 0; w < n; ++w) {
                auto& o = orders[w][choice[w]];
                for (size_t k = 0; k < o.size(); ++k) {
                    int t = end_mate[o[k]];
                    g.link[slot(w, static_cast<int>(k))] = static_cast<int16_t>(slot(end_vertex[t], pos[t]));
                }
            }
            if (!double_arcs_ok(g)) return;
            auto code = canonical_code(g, copt);
            if (seen.insert(code).second) out.push_back(g);
            return;
        }
        for (size_t c = 0; c < orders[v].size(); ++c) {
            choice[v] = static_cast<int>(c);
            auto& o = orders[v][c];
            for (size_t k = 0; k < o.size(); ++k) pos[o[k]] = static_cast<int>(k);
            rec(v + 1);
        }
    };
    rec(0);
}

std::vector<PlaneGraph> sorted_by_code(std::vector<PlaneGraph> v, CodeOptions copt) {
    std::vector<std::pair<CanonicalCode, PlaneGraph>> tagged;
    for (auto& g : v) tagged.emplace_back(canonical_code(g, copt), std::move(g));
    std::sort(tagged.begin(), tagged.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<PlaneGraph> out;
    for (auto& t : tagged) out.push_back(std::move(t.second));
    return out;
}

}  // namespace

std::vector<PlaneGraph> enumerate_plane_graphs(int q, EnumOptions opt) {
    if (q < 0 || q > 6) throw std::invalid_argument("quadrivalent vertex count must lie in 0..6");
    if (q == 0) return {theta_graph()};
    CodeOptions copt{false, opt.mirror_dedup};
    std::set<std::vector<int>> abstract_seen;
    std::set<CanonicalCode> seen;
    std::vector<PlaneGraph> out;
    generate_multigraphs(q, [&](const Multigraph& mg) {
        if (multigraph_connectivity(mg) != 3) return;
        if (!is_planar_abstract(mg)) return;
        if (!abstract_seen.insert(canonical_matrix(mg)).second) return;
        embed_all(bfs_relabel(mg), opt.mirror_dedup, seen, out, copt);
    });
    return sorted_by_code(std::move(out), copt);
}

std::vector<PlaneGraph> enumerate_plane_graphs_bruteforce(int q, EnumOptions opt) {
    if (q < 0 || q > 6) throw std::invalid_argument("quadrivalent vertex count must lie in 0..6");
    CodeOptions copt{false, opt.mirror_dedup};
    PlaneGraph g;
    g.add_vertex(3);
    g.add_vertex(3);
    for (int i = 0; i < q; ++i) g.add_vertex(4);
    std::vector<int> darts;
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s)) darts.push_back(s);
    std::set<CanonicalCode> seen;
    std::vector<PlaneGraph> out;
    std::function<void()> rec = [&]() {
        int a = -1;
        for (int s : darts)
            if (g.link[s] < 0) { a = s; break; }
        if (a < 0) {
            if (g.connected_parts() != 1 || !g.is_spherical()) return;
            if (edge_connectivity(g) != 3) return;
            if (has_loop(g) || !double_arcs_ok(g)) return;
            auto code = canonical_code(g, copt);
            if (seen.insert(code).second) out.push_back(g);
            return;
        }
        for (int b : darts) {
            if (b == a || g.link[b] >= 0) continue;
            int u = vert_of(a), w = vert_of(b);
            if (u == w) continue;
            int mult = 0;
            for (int k = 0; k < g.deg[u]; ++k) {
                int t = g.link[slot(u, k)];
                if (t >= 0 && vert_of(t) == w) ++mult;
            }
            if (mult >= ((g.deg[u] == 4 && g.deg[w] == 4) ? 2 : 1)) continue;
            g.join(a, b);
            rec();
            g.link[a] = g.link[b] = -1;
        }
    };
    rec();
    return sorted_by_code(std::move(out), copt);
}

// -------------------------------------------------------------------- text

std::string to_text(const PlaneGraph& g) {
    std::ostringstream os;
    os << "T=" << g.count(3) << " Q=" << g.count(4) << " |";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << (v ? " ;" : "") << " v" << v << (g.deg[v] == 3 ? "(t):" : "(q):");
        for (int k = 0; k < g.deg[v]; ++k) os << " d" << slot(v, k);
    }
    os << " | pairs:";
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && s < g.link[s]) os << " (d" << s << ",d" << g.link[s] << ")";
    return os.str();
}

PlaneGraph plane_graph_from_text(const std::string& line) {
    auto bar1 = line.find('|');
    auto bar2 = line.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos) throw std::runtime_error("plane graph line: missing '|' sections");
    std::string verts = line.substr(bar1 + 1, bar2 - bar1 - 1);
    std::string pairs = line.substr(bar2 + 1);
    PlaneGraph g;
    std::map<int, int> dart_slot;
    std::stringstream vs(verts);
    std::string chunk;
    while (std::getline(vs, chunk, ';')) {
        std::stringstream cs(chunk);
        std::string head, tok;
        if (!(cs >> head)) continue;
        std::vector<int> ds;
        while (cs >> tok) {
            if (tok.size() < 2 || tok[0] != 'd') throw std::runtime_error("plane graph line: bad dart token " + tok);
            ds.push_back(std::stoi(tok.substr(1)));
        }
        if (ds.size() != 3 && ds.size() != 4) throw std::runtime_error("plane graph line: vertex degree must be 3 or 4");
        int v = g.add_vertex(static_cast<int>(ds.size()));
        for (size_t k = 0; k < ds.size(); ++k) {
            if (dart_slot.count(ds[k])) throw std::runtime_error("plane graph line: dart listed twice");
            dart_slot[ds[k]] = slot(v, static_cast<int>(k));
        }
    }
    for (size_t p = pairs.find('('); p != std::string::npos; p = pairs.find('(', p + 1)) {
        auto e = pairs.find(')', p);
        std::string in = pairs.substr(p + 1, e - p - 1);
        auto c = in.find(',');
        int a = std::stoi(in.substr(1, c - 1)), b = std::stoi(in.substr(c + 2));
        if (!dart_slot.count(a) || !dart_slot.count(b)) throw std::runtime_error("plane graph line: unknown dart in pair");
        g.join(dart_slot[a], dart_slot[b]);
    }
    std::string why;
    if (!g.is_valid(&why)) throw std::runtime_error("plane graph line: " + why);
    return g;
}

nlohmann::json to_json(const PlaneGraph& g) {
    nlohmann::json j;
    j["T"] = g.count(3);
    j["Q"] = g.count(4);
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        nlohmann::json r;
        r["kind"] = g.deg[v] == 3 ? "t" : "q";
        for (int k = 0; k < g.deg[v]; ++k) r["rotation"].push_back(slot(v, k));
        vs.push_back(r);
    }
    auto& ps = j["pairs"] = nlohmann::json::array();
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && s < g.link[s]) ps.push_back({s, static_cast<int>(g.link[s])});
    return j;
}

PlaneGraph plane_graph_from_json(const nlohmann::json& j) {
    PlaneGraph g;
    std::map<int, int> dart_slot;
    for (auto& r : j.at("vertices")) {
        auto& rot = r.at("rotation");
        int v = g.add_vertex(static_cast<int>(rot.size()));
        for (size_t k = 0; k < rot.size(); ++k) dart_slot[rot[k].get<int>()] = slot(v, static_cast<int>(k));
    }
    for (auto& p : j.at("pairs")) g.join(dart_slot.at(p[0].get<int>()), dart_slot.at(p[1].get<int>()));
    std::string why;
    if (!g.is_valid(&why)) throw std::runtime_error("plane graph json: " + why);
    return g;
}

}  // namespace hlc
