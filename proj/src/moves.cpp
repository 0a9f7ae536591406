#include "hlc/moves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hlc {

namespace {

[[noreturn]] void mismatch(const char* what) { throw std::invalid_argument(std::string("move pattern mismatch: ") + what); }

// Build a diagram from a source by deleting vertices and adding new ones.
// take(old, new): the new slot inherits the outside partner of a slot on a
// deleted vertex (chasing through other deleted slots when needed).
struct Rewriter {
    const Diagram& src;
    int V0;
    std::vector<uint8_t> ndeg;
    std::vector<char> dead;
    std::vector<std::pair<int, int>> joins, takes;
    int free_delta = 0;

    explicit Rewriter(const Diagram& d) : src(d), V0(d.g.vertex_count()), dead(d.g.vertex_count(), 0) {}

    int add(int deg) {
        ndeg.push_back(static_cast<uint8_t>(deg));
        return V0 + static_cast<int>(ndeg.size()) - 1;
    }
    void kill(int v) { dead[v] = 1; }
    void join(int a, int b) { joins.emplace_back(a, b); }
    void take(int old_slot, int new_slot) { takes.emplace_back(old_slot, new_slot); }

    Diagram finish() const {
        int VT = V0 + static_cast<int>(ndeg.size());
        std::vector<int> link(4 * VT, -1);
        std::vector<uint8_t> deg(VT);
        for (int v = 0; v < V0; ++v) {
            deg[v] = src.g.deg[v];
            if (dead[v]) continue;
            for (int k = 0; k < deg[v]; ++k) link[slot(v, k)] = src.g.link[slot(v, k)];
        }
        for (size_t i = 0; i < ndeg.size(); ++i) deg[V0 + i] = ndeg[i];
        std::vector<int> M(4 * V0, -1);
        for (auto [o, n] : takes) M[o] = n;
        for (auto [a, b] : joins) link[a] = b, link[b] = a;
        for (auto [o, n] : takes) {
            int t = src.g.link[o];
            int target = dead[vert_of(t)] ? M[t] : t;
            if (target < 0) throw std::logic_error("rewrite left a dangling dart");
            link[n] = target;
            link[target] = n;
        }
        std::vector<int> newid(VT, -1);
        Diagram out;
        out.free_loops = src.free_loops + free_delta;
        for (int v = 0; v < VT; ++v)
            if (v >= V0 || !dead[v]) newid[v] = out.g.add_vertex(deg[v]);
        for (int v = 0; v < VT; ++v) {
            if (newid[v] < 0) continue;
            for (int k = 0; k < deg[v]; ++k) {
                int t = link[slot(v, k)];
                if (t < 0 || newid[vert_of(t)] < 0) throw std::logic_error("rewrite produced an unpaired dart");
                out.g.link[slot(newid[v], k)] = static_cast<int16_t>(slot(newid[vert_of(t)], pos_of(t)));
            }
        }
        return out;
    }
};

// slot for role k of a new crossing whose role 0 strand is under (fu) or over
int role(int v, int k, bool first_under) { return slot(v, first_under ? k : (k + 3) & 3); }

// remove crossings, reconnecting each strand straight through them
Diagram dissolve(const Diagram& d, const std::vector<int>& verts) {
    const auto& g = d.g;
    std::vector<char> dead(g.vertex_count(), 0), mark(g.slot_count(), 0);
    for (int v : verts) dead[v] = 1;
    std::vector<int> link(g.link.begin(), g.link.end());
    for (int s = 0; s < g.slot_count(); ++s) {
        if (!g.used(s) || dead[vert_of(s)]) continue;
        int t = g.link[s];
        if (!dead[vert_of(t)]) continue;
        while (dead[vert_of(t)]) {
            mark[t] = 1;
            int u = opposite(t);
            mark[u] = 1;
            t = g.link[u];
        }
        link[s] = t;
        link[t] = s;
    }
    int loops = 0;
    for (int v : verts)
        for (int k = 0; k < 4; ++k) {
            int x = slot(v, k);
            if (mark[x]) continue;
            ++loops;
            while (!mark[x]) {
                mark[x] = 1;
                int y = opposite(x);
                mark[y] = 1;
                x = g.link[y];
            }
        }
    Diagram out;
    out.free_loops = d.free_loops + loops;
    std::vector<int> newid(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dead[v]) newid[v] = out.g.add_vertex(g.deg[v]);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dead[v]) continue;
        for (int k = 0; k < g.deg[v]; ++k) {
            int t = link[slot(v, k)];
            out.g.link[slot(newid[v], k)] = static_cast<int16_t>(slot(newid[vert_of(t)], pos_of(t)));
        }
    }
    return out;
}

bool is_crossing(const PlaneGraph& g, int v) { return g.deg[v] == 4; }

// ---- site predicates

bool r1_site(const PlaneGraph& g, int v) {
    if (!is_crossing(g, v)) return false;
    for (int k = 0; k < 4; ++k)
        if (g.link[slot(v, k)] == slot(v, (k + 1) & 3)) return true;
    return false;
}

bool r2_site(const PlaneGraph& g, int d) {
    int e = g.phi(d);
    if (g.phi(e) != d) return false;
    int x = vert_of(d), y = vert_of(e);
    if (x == y || !is_crossing(g, x) || !is_crossing(g, y)) return false;
    // strand on the edge (d, link d) must be over at both ends or under at both
    return (pos_of(d) & 1) == (pos_of(g.link[d]) & 1);
}

struct Triangle {
    int dx, dy, dz;
};

bool triangle(const PlaneGraph& g, int d, Triangle& t) {
    t.dx = d;
    t.dy = g.phi(d);
    t.dz = g.phi(t.dy);
    if (g.phi(t.dz) != d) return false;
    int X = vert_of(t.dx), Y = vert_of(t.dy), Z = vert_of(t.dz);
    return X != Y && Y != Z && X != Z;
}

bool r3_site(const PlaneGraph& g, int d) {
    Triangle t;
    if (!triangle(g, d, t)) return false;
    if (!is_crossing(g, vert_of(t.dx)) || !is_crossing(g, vert_of(t.dy)) || !is_crossing(g, vert_of(t.dz)))
        return false;
    bool a_over_y = pos_of(g.link[t.dx]) & 1, a_over_x = pos_of(t.dx) & 1, b_over_z = pos_of(g.link[t.dy]) & 1;
    bool cyclic = (a_over_y && b_over_z && !a_over_x) || (!a_over_y && !b_over_z && a_over_x);
    return !cyclic;
}

bool r4_site(const PlaneGraph& g, int dv) {
    Triangle t;
    if (!triangle(g, dv, t)) return false;
    if (g.deg[vert_of(t.dx)] != 3 || !is_crossing(g, vert_of(t.dy)) || !is_crossing(g, vert_of(t.dz))) return false;
    // strand on the crossing-crossing edge passes on the same level at both
    return (pos_of(t.dy) & 1) == (pos_of(g.link[t.dy]) & 1);
}

bool r5_site(const PlaneGraph& g, int a) {
    int b = g.phi(a);
    if (g.phi(b) != a) return false;
    return g.deg[vert_of(a)] == 3 && is_crossing(g, vert_of(b));
}

bool ih_site(const PlaneGraph& g, int du) {
    int dv = g.link[du];
    int u = vert_of(du), v = vert_of(dv);
    return u != v && g.deg[u] == 3 && g.deg[v] == 3;
}

// ---- rewrites

Diagram do_r1_inverse(const Diagram& d, int s, int variant) {
    Rewriter rw(d);
    int t = d.g.link[s];
    int x = rw.add(4);
    int a = variant & 1;
    rw.join(slot(x, a), slot(x, a + 1));
    if (variant & 2) {
        rw.join(s, slot(x, (a + 3) & 3));
        rw.join(t, slot(x, (a + 2) & 3));
    } else {
        rw.join(s, slot(x, (a + 2) & 3));
        rw.join(t, slot(x, (a + 3) & 3));
    }
    return rw.finish();
}

Diagram do_r2_inverse(const Diagram& d, int d1, int d2, bool e1_over) {
    Rewriter rw(d);
    int l1 = d.g.link[d1], l2 = d.g.link[d2];
    int A = rw.add(4), B = rw.add(4);
    bool fu = !e1_over;  // role 0 (east) lies on e1
    // roles: 0 east, 1 north, 2 west, 3 south
    rw.join(role(A, 0, fu), role(B, 2, fu));
    rw.join(role(A, 1, fu), l2);
    rw.join(role(A, 2, fu), d1);
    rw.join(role(A, 3, fu), role(B, 3, fu));
    rw.join(role(B, 0, fu), l1);
    rw.join(role(B, 1, fu), d2);
    return rw.finish();
}

Diagram do_r3(const Diagram& d, int dx) {
    const auto& g = d.g;
    Triangle t;
    triangle(g, dx, t);
    int X = vert_of(t.dx), Y = vert_of(t.dy), Z = vert_of(t.dz);
    bool a_over_y = pos_of(g.link[t.dx]) & 1, a_over_x = pos_of(t.dx) & 1, b_over_z = pos_of(g.link[t.dy]) & 1;
    int aX = opposite(t.dx), aY = opposite(g.link[t.dx]);
    int bY = opposite(t.dy), bZ = opposite(g.link[t.dy]);
    int cZ = opposite(t.dz), cX = opposite(g.link[t.dz]);
    Rewriter rw(d);
    rw.kill(X), rw.kill(Y), rw.kill(Z);
    int P = rw.add(4), Q = rw.add(4), W = rw.add(4);
    bool pu = !a_over_y, qu = !a_over_x, wu = b_over_z;
    // P = a x b : [a->Q, b out, a out, b->W]
    rw.take(bZ, role(P, 1, pu));
    rw.take(aX, role(P, 2, pu));
    // Q = a x c : [a out, c out, a->P, c->W]
    rw.take(aY, role(Q, 0, qu));
    rw.take(cZ, role(Q, 1, qu));
    // W = b x c : [c->Q, b->P, c out, b out]
    rw.take(cX, role(W, 2, wu));
    rw.take(bY, role(W, 3, wu));
    rw.join(role(P, 0, pu), role(Q, 2, qu));
    rw.join(role(P, 3, pu), role(W, 1, wu));
    rw.join(role(Q, 3, qu), role(W, 0, wu));
    return rw.finish();
}

Diagram do_r4(const Diagram& d, int dv) {
    const auto& g = d.g;
    Triangle t;
    triangle(g, dv, t);
    int V = vert_of(t.dx), X = vert_of(t.dy), Y = vert_of(t.dz);
    int dX = t.dy, dY = t.dz;
    bool s_over = pos_of(dX) & 1;
    int d3 = g.prev(dv);
    Rewriter rw(d);
    rw.kill(V), rw.kill(X), rw.kill(Y);
    int Wc = rw.add(4), Vn = rw.add(3);
    bool fu = !s_over;
    // W roles: east, north, west, south; the strand runs east-west
    rw.take(opposite(g.link[dX]), role(Wc, 0, fu));
    rw.take(d3, role(Wc, 1, fu));
    rw.take(opposite(dX), role(Wc, 2, fu));
    rw.join(role(Wc, 3, fu), slot(Vn, 0));
    rw.take(opposite(g.link[dv]), slot(Vn, 1));
    rw.take(opposite(dY), slot(Vn, 2));
    return rw.finish();
}

Diagram do_r4_inverse(const Diagram& d, int d3) {
    const auto& g = d.g;
    int V = vert_of(d3);
    int wS = g.link[d3], W = vert_of(wS);
    int wE = g.next(wS), wN = opposite(wS), wW = g.prev(wS);
    bool fu = (pos_of(wE) & 1) == 0;
    Rewriter rw(d);
    rw.kill(V), rw.kill(W);
    int X = rw.add(4), Y = rw.add(4), Vn = rw.add(3);
    // X: [E, NE, W, SW]   Y: [E, NW, W, SE]
    rw.join(role(X, 0, fu), role(Y, 2, fu));
    rw.join(role(X, 1, fu), slot(Vn, 1));
    rw.take(wW, role(X, 2, fu));
    rw.take(g.next(d3), role(X, 3, fu));
    rw.take(wE, role(Y, 0, fu));
    rw.join(role(Y, 1, fu), slot(Vn, 2));
    rw.take(g.prev(d3), role(Y, 3, fu));
    rw.take(wN, slot(Vn, 0));
    return rw.finish();
}

Diagram do_r5(const Diagram& d, int a) {
    const auto& g = d.g;
    int b = g.phi(a);
    int V = vert_of(a), X = vert_of(b);
    Rewriter rw(d);
    rw.kill(V), rw.kill(X);
    int Vn = rw.add(3);
    rw.take(g.prev(a), slot(Vn, 0));
    rw.take(opposite(b), slot(Vn, 1));
    rw.take(opposite(g.next(b)), slot(Vn, 2));
    return rw.finish();
}

Diagram do_r5_inverse(const Diagram& d, int d3, int p) {
    const auto& g = d.g;
    int V = vert_of(d3);
    int dL = g.next(d3), dR = g.next(dL);
    Rewriter rw(d);
    rw.kill(V);
    int Vn = rw.add(3), X = rw.add(4);
    rw.take(d3, slot(Vn, 0));
    rw.join(slot(Vn, 1), slot(X, p));
    rw.join(slot(Vn, 2), slot(X, (p + 3) & 3));
    rw.take(dL, slot(X, (p + 1) & 3));
    rw.take(dR, slot(X, (p + 2) & 3));
    return rw.finish();
}

Diagram do_ih(const Diagram& d, int du) {
    const auto& g = d.g;
    int dv = g.link[du];
    int u = vert_of(du), v = vert_of(dv);
    int a = g.next(du), b = g.next(a), c = g.next(dv), dd = g.next(c);
    Rewriter rw(d);
    rw.kill(u), rw.kill(v);
    int T = rw.add(3), B = rw.add(3);
    rw.join(slot(T, 0), slot(B, 0));
    rw.take(dd, slot(T, 1));
    rw.take(a, slot(T, 2));
    rw.take(b, slot(B, 1));
    rw.take(c, slot(B, 2));
    return rw.finish();
}

}  // namespace

int crossing_delta(const MoveStep& m) {
    int sign = m.dir == Direction::Apply ? -1 : 1;
    switch (m.kind) {
        case MoveKind::R1: return sign;
        case MoveKind::R2: return 2 * sign;
        case MoveKind::R3: return 0;
        case MoveKind::R4: return sign;
        case MoveKind::R5: return sign;
        case MoveKind::IH: return 0;
    }
    return 0;
}

std::string describe(const MoveStep& m) {
    static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "IH"};
    std::ostringstream os;
    os << names[static_cast<int>(m.kind)] << (m.dir == Direction::Apply ? "" : "+") << "@" << m.a;
    if (m.b >= 0) os << "," << m.b;
    if (m.variant) os << "/" << m.variant;
    return os.str();
}

std::vector<MoveStep> enumerate_move_sites(const Diagram& d, MoveSet kinds, int max_crossings) {
    const auto& g = d.g;
    std::vector<MoveStep> out;
    int c = d.crossing_count();
    auto room = [&](int delta) { return max_crossings < 0 || c + delta <= max_crossings; };
    auto has = [&](MoveKind k) { return (kinds & bit(k)) != 0; };
    int S = g.slot_count();

    if (has(MoveKind::R1)) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (r1_site(g, v)) out.push_back({MoveKind::R1, Direction::Apply, v});
        if (room(1))
            for (int s = 0; s < S; ++s)
                if (g.used(s) && s < g.link[s])
                    for (int var = 0; var < 4; ++var) out.push_back({MoveKind::R1, Direction::Inverse, s, -1, var});
    }
    if (has(MoveKind::R2)) {
        for (int s = 0; s < S; ++s)
            if (g.used(s) && r2_site(g, s) && s < g.phi(s)) out.push_back({MoveKind::R2, Direction::Apply, s});
        if (room(2)) {
            std::vector<int> face_of;
            int F = g.faces(face_of);
            std::vector<std::vector<int>> darts(F);
            for (int s = 0; s < S; ++s)
                if (face_of[s] >= 0) darts[face_of[s]].push_back(s);
            for (auto& f : darts)
                for (size_t i = 0; i < f.size(); ++i)
                    for (size_t j = i + 1; j < f.size(); ++j) {
                        if (g.link[f[i]] == f[j]) continue;
                        for (int var = 0; var < 2; ++var)
                            out.push_back({MoveKind::R2, Direction::Inverse, f[i], f[j], var});
                    }
        }
    }
    if (has(MoveKind::R3)) {
        for (int s = 0; s < S; ++s) {
            if (!g.used(s) || !r3_site(g, s)) continue;
            int t1 = g.phi(s), t2 = g.phi(t1);
            if (s < t1 && s < t2) out.push_back({MoveKind::R3, Direction::Apply, s});
        }
    }
    if (has(MoveKind::R4)) {
        for (int s = 0; s < S; ++s)
            if (g.used(s) && g.deg[vert_of(s)] == 3 && r4_site(g, s)) out.push_back({MoveKind::R4, Direction::Apply, s});
        if (room(1))
            for (int s = 0; s < S; ++s)
                if (g.used(s) && g.deg[vert_of(s)] == 3 && is_crossing(g, vert_of(g.link[s])))
                    out.push_back({MoveKind::R4, Direction::Inverse, s});
    }
    if (has(MoveKind::R5)) {
        for (int s = 0; s < S; ++s)
            if (g.used(s) && g.deg[vert_of(s)] == 3 && r5_site(g, s)) out.push_back({MoveKind::R5, Direction::Apply, s});
        if (room(1))
            for (int s = 0; s < S; ++s)
                if (g.used(s) && g.deg[vert_of(s)] == 3)
                    for (int p = 0; p < 2; ++p) out.push_back({MoveKind::R5, Direction::Inverse, s, -1, p});
    }
    if (has(MoveKind::IH)) {
        for (int s = 0; s < S; ++s)
            if (g.used(s) && g.deg[vert_of(s)] == 3 && ih_site(g, s) && s < g.link[s])
                out.push_back({MoveKind::IH, Direction::Apply, s});
    }
    return out;
}

Diagram apply_move(const Diagram& d, const MoveStep& m) {
    const auto& g = d.g;
    auto valid_slot = [&](int s) { return s >= 0 && s < g.slot_count() && g.used(s); };
    bool inv = m.dir == Direction::Inverse;
    switch (m.kind) {
        case MoveKind::R1:
            if (!inv) {
                if (m.a < 0 || m.a >= g.vertex_count() || !r1_site(g, m.a)) mismatch("R1 needs a crossing bounding a monogon");
                return dissolve(d, {m.a});
            }
            if (!valid_slot(m.a) || m.variant < 0 || m.variant > 3) mismatch("R1 inverse needs an edge and a variant 0..3");
            return do_r1_inverse(d, m.a, m.variant);
        case MoveKind::R2:
            if (!inv) {
                if (!valid_slot(m.a) || !r2_site(g, m.a)) mismatch("R2 needs a bigon between two crossings with a strand over at both");
                return dissolve(d, {vert_of(m.a), vert_of(g.phi(m.a))});
            }
            {
                if (!valid_slot(m.a) || !valid_slot(m.b) || m.a == m.b || g.link[m.a] == m.b)
                    mismatch("R2 inverse needs two distinct edges");
                std::vector<int> fo;
                g.faces(fo);
                if (fo[m.a] != fo[m.b]) mismatch("R2 inverse needs two edges on a common face");
                return do_r2_inverse(d, m.a, m.b, m.variant != 0);
            }
        case MoveKind::R3:
            if (!valid_slot(m.a) || !r3_site(g, m.a)) mismatch("R3 needs a triangle of crossings with an acyclic over/under order");
            return do_r3(d, m.a);
        case MoveKind::R4:
            if (!inv) {
                if (!valid_slot(m.a) || g.deg[vert_of(m.a)] != 3 || !r4_site(g, m.a))
                    mismatch("R4 needs a triangle at a vertex whose opposite strand passes on one level");
                return do_r4(d, m.a);
            }
            if (!valid_slot(m.a) || g.deg[vert_of(m.a)] != 3 || !is_crossing(g, vert_of(g.link[m.a])))
                mismatch("R4 inverse needs a vertex edge ending at a crossing");
            return do_r4_inverse(d, m.a);
        case MoveKind::R5:
            if (!inv) {
                if (!valid_slot(m.a) || !r5_site(g, m.a)) mismatch("R5 needs a bigon between a vertex and a crossing");
                return do_r5(d, m.a);
            }
            if (!valid_slot(m.a) || g.deg[vert_of(m.a)] != 3 || (m.variant != 0 && m.variant != 1))
                mismatch("R5 inverse needs a vertex dart and a crossing type 0/1");
            return do_r5_inverse(d, m.a, m.variant);
        case MoveKind::IH:
            if (!valid_slot(m.a) || g.deg[vert_of(m.a)] != 3 || !ih_site(g, m.a))
                mismatch("IH needs an edge joining two distinct trivalent vertices");
            return do_ih(d, m.a);
    }
    mismatch("unknown move");
}

void for_each_neighbor(const Diagram& d, MoveSet kinds, int max_crossings,
                       const std::function<void(Diagram&&, const MoveStep&)>& f) {
    for (auto& m : enumerate_move_sites(d, kinds, max_crossings)) f(apply_move(d, m), m);
}

}  // namespace hlc
