#include "hlc/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlc {

KsValue ks(const Diagram& d, const GroupTable& g) {
    return {g.name, count_hom_classes(presentation_from_diagram(d), g)};
}

// ------------------------------------------------------------ irreducibility

namespace {

using u128 = unsigned __int128;

u128 upow(u128 b, int e) {
    u128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool divides(u128 m, u128 x) { return x % m == 0; }

}  // namespace

IrreducibilityVerdict irreducibility_test(uint64_t a4, std::optional<uint64_t> a5, int n, int rank_bound) {
    if (n < 2) throw std::invalid_argument("irreducibility_test: needs n >= 2");
    IrreducibilityVerdict v;
    auto add = [&](const std::string& name, bool tested, bool div) {
        v.conditions.push_back({name, tested, div});
        return div;
    };
    // trivial knot factor
    bool unknot_a4 = add("unknot-A4", true, divides(12, a4 + 6 * upow(3, n) + 2 * upow(4, n)));
    std::optional<bool> unknot_a5;
    if (a5) unknot_a5 = add("unknot-A5", true, divides(60, *a5 + 14 * upow(4, n) + 19 * upow(3, n) + 22 * upow(5, n)));
    else add("unknot-A5", false, false);
    // the unknot condition fails when either half fails; unknown when only the A5 half could decide
    std::optional<bool> unknot;
    if (!unknot_a4) unknot = false;
    else if (unknot_a5) unknot = *unknot_a5;
    // 2-generator knot factor, p in {0,1}
    bool knot2 = false;
    for (int p = 0; p <= 1; ++p)
        knot2 |= add("knot2(p=" + std::to_string(p) + ")", true,
                   divides(12 + 24 * p, a4 + (6 + 16 * p) * upow(3, n) + (2 + 6 * p) * upow(4, n)));
    // 2-component 2-generator link factor, p in {0..4}
    bool link2 = false;
    for (int p = 0; p <= 4; ++p)
        link2 |= add("link2(p=" + std::to_string(p) + ")", true,
                   divides(48 + 24 * p, a4 + (26 + 16 * p) * upow(3, n - 1) + (8 + 6 * p) * upow(4, n - 1)));

    if (rank_bound < n + 1) {
        v.reason = "rank bound below n+1";
        return v;
    }
    bool all = true;
    std::string why;
    for (int r = n + 1; r <= rank_bound && all; ++r) {
        if (n == 2 && r == 3) {
            if (!unknot) all = false, why = "unknot factor needs ks_A5";
            else if (*unknot) all = false, why = "unknot factor divides (rank 3, n=2)";
        } else if (n == 2 && r == 4) {
            if (knot2) all = false, why = "knot2 factor divides (rank 4, n=2)";
        } else if ((n == 3 && r == 4) || (n == 4 && r == 5)) {
            if (!unknot) all = false, why = "unknot factor needs ks_A5";
            else if (*unknot) all = false, why = "unknot factor divides";
            else if (link2) all = false, why = "link2 factor divides";
        } else {
            all = false, why = "no rule for n=" + std::to_string(n) + " rank " + std::to_string(r);
        }
    }
    v.conclusion = all ? Conclusion::Irreducible : Conclusion::Inconclusive;
    v.reason = all ? "all applicable conditions fail" : why;
    return v;
}

// ------------------------------------------------------------------ linking

std::vector<long> elementary_divisors(std::vector<std::vector<long>> m) {
    std::vector<long> out;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the remaining block as pivot
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi == rows || std::labs(m[i][j]) < std::labs(m[pi][pj]))) pi = i, pj = j;
        if (pi == rows) break;
        std::swap(m[t], m[pi]);
        for (auto& row : m) std::swap(row[t], row[pj]);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            long q = m[i][t] / m[t][t];
            for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t]) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            long q = m[t][j] / m[t][t];
            for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j]) clean = false;
        }
        if (!clean) continue;
        // pivot must divide the rest of the block
        bool divides_rest = true;
        for (size_t i = t + 1; i < rows && divides_rest; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t]) {
                    for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    divides_rest = false;
                    break;
                }
        if (!divides_rest) continue;
        out.push_back(std::labs(m[t][t]));
        ++t;
    }
    return out;
}

namespace {

struct Strands {
    std::vector<int> of_slot;  // strand id per slot
    struct S {
        int comp, from, to;  // endpoint trivalent vertices, -1 for circles
    };
    std::vector<S> list;
};

Strands strands(const Diagram& d, const Components& comps, const std::vector<int8_t>& o) {
    const auto& g = d.g;
    Strands st;
    st.of_slot.assign(g.slot_count(), -1);
    auto walk = [&](int s) {
        int id = static_cast<int>(st.list.size());
        Strands::S rec{comps.of_slot[s], g.deg[vert_of(s)] == 3 ? vert_of(s) : -1, -1};
        int start = s;
        while (true) {
            st.of_slot[s] = id;
            int t = g.link[s];
            st.of_slot[t] = id;
            if (g.deg[vert_of(t)] != 4) {
                rec.to = vert_of(t);
                break;
            }
            s = opposite(t);
            if (s == start) break;
        }
        st.list.push_back(rec);
    };
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && o[s] > 0 && st.of_slot[s] < 0 && g.deg[vert_of(s)] == 3) walk(s);
    for (int s = 0; s < g.slot_count(); ++s)
        if (g.used(s) && o[s] > 0 && st.of_slot[s] < 0) walk(s);
    return st;
}

// cycle basis of one component as signed strand multiplicities
std::vector<std::vector<int>> cycle_basis(const Strands& st, int comp, int nstrands) {
    std::vector<int> mine;
    for (int i = 0; i < nstrands; ++i)
        if (st.list[i].comp == comp) mine.push_back(i);
    std::vector<std::vector<int>> cycles;
    if (mine.size() == 1 && st.list[mine[0]].from < 0) {
        std::vector<int> c(nstrands, 0);
        c[mine[0]] = 1;
        cycles.push_back(c);
        return cycles;
    }
    // spanning tree by union-find over the trivalent endpoints
    std::vector<int> verts;
    for (int i : mine) verts.push_back(st.list[i].from), verts.push_back(st.list[i].to);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto vi = [&](int v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
    int nv = static_cast<int>(verts.size());
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, signed strand)
    std::vector<int> par(nv);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    std::vector<int> nontree;
    for (int i : mine) {
        int a = vi(st.list[i].from), b = vi(st.list[i].to);
        if (a != b && find(a) != find(b)) {
            par[find(a)] = find(b);
            adj[a].push_back({b, i + 1});
            adj[b].push_back({a, -(i + 1)});
        } else {
            nontree.push_back(i);
        }
    }
    // tree path from x to y as signed strands
    auto tree_path = [&](int x, int y) {
        std::vector<int> prev(nv, 0), pv(nv, -1);
        std::vector<int> q{x};
        pv[x] = x;
        for (size_t h = 0; h < q.size(); ++h)
            for (auto [w, s] : adj[q[h]])
                if (pv[w] < 0) pv[w] = q[h], prev[w] = s, q.push_back(w);
        std::vector<int> path;
        for (int v = y; v != x; v = pv[v]) path.push_back(prev[v]);
        std::reverse(path.begin(), path.end());
        return path;
    };
    for (int i : nontree) {
        std::vector<int> c(nstrands, 0);
        c[i] += 1;
        for (int s : tree_path(vi(st.list[i].to), vi(st.list[i].from))) c[std::abs(s) - 1] += s > 0 ? 1 : -1;
        cycles.push_back(c);
    }
    return cycles;
}

}  // namespace

LinkingMatrix linking_matrix(const Diagram& d, int ca, int cb) {
    auto comps = trace_components(d);
    if (ca < 0 || cb < 0 || ca >= comps.count || cb >= comps.count || ca == cb)
        throw std::invalid_argument("linking_matrix: invalid component pair");
    auto o = orientation(d);
    auto st = strands(d, comps, o);
    int ns = static_cast<int>(st.list.size());
    auto basis_of = [&](int c) {
        if (comps.free_loop[c]) return std::vector<std::vector<int>>{std::vector<int>(ns, 0)};
        return cycle_basis(st, c, ns);
    };
    auto A = basis_of(ca), B = basis_of(cb);
    LinkingMatrix lm;
    lm.entries.assign(A.size(), std::vector<long>(B.size(), 0));
    const auto& g = d.g;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.deg[v] != 4) continue;
        int su = st.of_slot[slot(v, 0)], so = st.of_slot[slot(v, 1)];
        int sign = crossing_sign(d, o, v);
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j)
                lm.entries[i][j] += sign * (A[i][su] * B[j][so] + A[i][so] * B[j][su]);
    }
    for (auto& row : lm.entries)
        for (auto& x : row) {
            if (x % 2) throw std::logic_error("linking_matrix: odd Gauss sum");
            x /= 2;
        }
    lm.divisors = elementary_divisors(lm.entries);
    return lm;
}

// --------------------------------------------------------------- chirality

ChiralityResult chirality_test(const Diagram& d, int comp, const GroupTable& g) {
    auto p = presentation_from_diagram(d);
    auto [m, l] = peripheral_words(d, comp);
    ChiralityResult r;
    r.n = count_constrained_classes(p, g, concat(m, l));
    r.rn = count_constrained_classes(p, g, concat(m, inverse(l)));
    r.verdict = r.n != r.rn ? Chirality::Chiral : Chirality::Inconclusive;
    return r;
}

// ---------------------------------------------------------------- deletion

Diagram delete_components(const Diagram& d, const std::vector<int>& gone) {
    auto comps = trace_components(d);
    std::vector<char> del(comps.count, 0);
    for (int c : gone) {
        if (c < 0 || c >= comps.count) throw std::invalid_argument("delete_component: component not found");
        del[c] = 1;
    }
    Diagram out;
    for (int c = 0; c < comps.count; ++c)
        if (comps.free_loop[c] && !del[c]) out.free_loops++;
    const auto& g = d.g;
    int nv = g.vertex_count();
    auto dead = [&](int s) { return del[comps.of_slot[s]] != 0; };
    // 0 kept, 1 pass-through (one strand deleted), 2 removed
    std::vector<int> kind(nv, 0), newv(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (g.deg[v] == 3) {
            kind[v] = dead(slot(v, 0)) ? 2 : 0;
            continue;
        }
        bool u = dead(slot(v, 0)), ov = dead(slot(v, 1));
        kind[v] = u && ov ? 2 : (u || ov ? 1 : 0);
    }
    for (int v = 0; v < nv; ++v)
        if (kind[v] == 0) newv[v] = out.g.add_vertex(g.deg[v]);
    std::vector<char> touched(g.slot_count(), 0);
    for (int v = 0; v < nv; ++v) {
        if (kind[v] != 0) continue;
        for (int k = 0; k < g.deg[v]; ++k) {
            int s = slot(v, k);
            if (touched[s]) continue;
            int t = g.link[s];
            while (kind[vert_of(t)] == 1) {
                touched[t] = touched[opposite(t)] = 1;
                t = g.link[opposite(t)];
            }
            touched[s] = touched[t] = 1;
            out.g.join(slot(newv[v], k), slot(newv[vert_of(t)], pos_of(t)));
        }
    }
    // circles that only met deleted strands become free loops
    std::vector<char> has_kept(comps.count, 0), present(comps.count, 0);
    for (int s = 0; s < g.slot_count(); ++s) {
        if (!g.used(s) || dead(s)) continue;
        present[comps.of_slot[s]] = 1;
        if (kind[vert_of(s)] == 0) has_kept[comps.of_slot[s]] = 1;
    }
    for (int c = 0; c < comps.count; ++c)
        if (present[c] && !has_kept[c] && !comps.free_loop[c]) out.free_loops++;
    return out;
}

Diagram delete_component(const Diagram& d, int comp) {
    auto comps = trace_components(d);
    if (comp < 0 || comp >= comps.count) throw std::invalid_argument("delete_component: component not found");
    if (comps.trivalent[comp] > 0) throw std::invalid_argument("delete_component: not a circle component");
    return delete_components(d, {comp});
}

std::optional<std::string> nonsplit_certificate(const Diagram& d, const GroupTable& g) {
    auto comps = trace_components(d);
    int n = comps.count;
    if (n <= 1) return "one component";
    std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) linked[a][b] = linked[b][a] = !linking_matrix(d, a, b).divisors.empty();
    uint64_t whole = count_homs(presentation_from_diagram(d), g);
    bool by_linking = true;
    // every split into two sides with no linking across must fail the free-product count
    for (unsigned mask = 1; mask + 1 < (1u << n); mask += 2) {
        std::vector<int> side_a, side_b;
        bool crossing_link = false;
        for (int c = 0; c < n; ++c) (mask >> c & 1u ? side_a : side_b).push_back(c);
        for (int a : side_a)
            for (int b : side_b) crossing_link = crossing_link || linked[a][b];
        if (crossing_link) continue;
        by_linking = false;
        uint64_t pa = count_homs(presentation_from_diagram(delete_components(d, side_b)), g);
        uint64_t pb = count_homs(presentation_from_diagram(delete_components(d, side_a)), g);
        if (pa * pb == whole) return std::nullopt;
    }
    if (by_linking) return "linking numbers connect all components";
    return std::string("homomorphism count to ") + g.name + " is not a free-product count";
}

std::vector<uint64_t> deletion_ks(const Diagram& d, const GroupTable& g) {
    auto comps = trace_components(d);
    std::vector<uint64_t> out;
    for (int c = 0; c < comps.count; ++c)
        if (comps.trivalent[c] == 0) out.push_back(ks(delete_component(d, c), g).count);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hlc
