#include "hlc/composites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "hlc/invariants.hpp"
#include "hlc/parallel.hpp"

namespace hlc {

bool InvariantTuple::same_class(const InvariantTuple& o) const {
    if (n != o.n || ks_a4 != o.ks_a4 || linking != o.linking || deletion_a4 != o.deletion_a4) return false;
    if (ks_a5 && o.ks_a5 && *ks_a5 != *o.ks_a5) return false;
    return true;
}

std::string InvariantTuple::describe() const {
    std::ostringstream os;
    os << "c=" << c << " n=" << n << " A4=" << ks_a4 << " A5=";
    if (ks_a5) os << *ks_a5;
    else os << "-";
    os << " rank<=" << rank_bound << " lk=[";
    for (size_t i = 0; i < linking.size(); ++i) {
        os << (i ? " " : "") << "(";
        for (size_t j = 0; j < linking[i].size(); ++j) os << (j ? "," : "") << linking[i][j];
        os << ")";
    }
    os << "] del=[";
    for (size_t i = 0; i < deletion_a4.size(); ++i) os << (i ? "," : "") << deletion_a4[i];
    os << "]";
    return os.str();
}

InvariantTuple invariant_tuple(const Diagram& d, const GroupTable& a4, const GroupTable* a5) {
    InvariantTuple t;
    t.c = d.crossing_count();
    auto comps = trace_components(d);
    t.n = comps.count;
    auto p = presentation_from_diagram(d);
    t.ks_a4 = count_hom_classes(p, a4);
    if (a5) t.ks_a5 = count_hom_classes(p, *a5);
    t.rank_bound = tietze_simplify(p).gens;
    std::vector<int> par(comps.count);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    int parts = comps.count;
    for (int a = 0; a < comps.count; ++a)
        for (int b = a + 1; b < comps.count; ++b) {
            auto div = linking_matrix(d, a, b).divisors;
            if (!div.empty() && find(a) != find(b)) par[find(a)] = find(b), --parts;
            t.linking.push_back(div);
        }
    t.linking_connected = parts == 1;
    std::sort(t.linking.begin(), t.linking.end());
    t.deletion_a4 = deletion_ks(d, a4);
    return t;
}

namespace {

struct Summand {
    Diagram d;
    std::string trace;
    int count;  // number of pool links summed
};

void add_unique(std::vector<Summand>& out, std::unordered_map<Hash128, int, Hash128Hasher>& seen, Summand s,
                bool up_to_mirror) {
    Hash128 h = hash_code(diagram_code(s.d, up_to_mirror));
    if (seen.emplace(h, static_cast<int>(out.size())).second) out.push_back(std::move(s));
}

std::string site_str(const std::string& name, int slot, bool flip) {
    return name + "[" + std::to_string(slot) + (flip ? "~" : "") + "]";
}

}  // namespace

CompositeReport enumerate_composites(const std::vector<PoolEntry>& graphs, const std::vector<PoolEntry>& links,
                                     const GroupTable& a4, const GroupTable& a5,
                                     const std::vector<PoolEntry>& reducible_models, CompositeOptions opt) {
    // link summands: pool links in both mirror images, and their sums
    std::vector<Summand> lset;
    std::unordered_map<Hash128, int, Hash128Hasher> lseen;
    for (auto& l : links) {
        add_unique(lset, lseen, {l.d, l.name, 1}, false);
        add_unique(lset, lseen, {mirror(l.d), "r" + l.name, 1}, false);
    }
    for (size_t i = 0; i < lset.size(); ++i) {
        if (lset[i].count >= opt.max_link_summands) continue;
        for (size_t j = 0; j < links.size() * 2 && j < lset.size(); ++j) {
            if (lset[j].count != 1) continue;
            if (lset[i].d.crossing_count() + lset[j].d.crossing_count() > opt.max_crossings) continue;
            for (auto e1 : edge_sites(lset[i].d))
                for (auto e2 : edge_sites(lset[j].d))
                    for (int f = 0; f < 2; ++f)
                        add_unique(lset, lseen,
                                   {order2_sum(lset[i].d, e1, lset[j].d, e2, f),
                                    "(" + lset[i].trace + " # " + site_str(lset[j].trace, e2.slot, f) + ")",
                                    lset[i].count + 1},
                                   false);
        }
    }

    CompositeReport rep;
    std::unordered_map<Hash128, int, Hash128Hasher> seen;
    std::vector<Summand> frontier;
    for (auto& g : graphs) frontier.push_back({g.d, g.name, 0});
    while (!frontier.empty()) {
        std::vector<Summand> next;
        for (auto& x : frontier)
            for (auto& l : lset) {
                if (x.count + l.count > opt.max_link_summands) continue;
                if (x.d.crossing_count() + l.d.crossing_count() > opt.max_crossings) continue;
                for (auto e1 : edge_sites(x.d))
                    for (auto e2 : edge_sites(l.d))
                        for (int f = 0; f < 2; ++f) {
                            Diagram s = order2_sum(x.d, e1, l.d, e2, f);
                            Hash128 h = hash_code(diagram_code(s, true));
                            if (!seen.emplace(h, static_cast<int>(rep.candidates.size())).second) continue;
                            std::string tr = site_str(x.trace, e1.slot, false) + " # " + site_str(l.trace, e2.slot, f);
                            CompositeCandidate c;
                            c.d = s;
                            c.trace = tr;
                            rep.candidates.push_back(c);
                            next.push_back({s, tr, x.count + l.count});
                        }
            }
        frontier = std::move(next);
    }

    // certification
    parallel_for(rep.candidates.size(), opt.workers, [&](size_t i) {
        auto& c = rep.candidates[i];
        c.inv = invariant_tuple(c.d, a4, nullptr);
        if (c.inv.n < 2) {
            c.fate = CompositeFate::NotALink;
            c.certificate = "single component";
            return;
        }
        if (is_decomposed(c.d)) {
            c.fate = CompositeFate::Decomposed;
            c.certificate = "diagram decomposed";
            return;
        }
        auto v = irreducibility_test(c.inv.ks_a4, std::nullopt, c.inv.n, c.inv.rank_bound);
        if (v.conclusion != Conclusion::Irreducible && v.reason == "unknot factor needs ks_A5") {
            c.inv.ks_a5 = count_hom_classes(presentation_from_diagram(c.d), a5);
            v = irreducibility_test(c.inv.ks_a4, c.inv.ks_a5, c.inv.n, c.inv.rank_bound);
        }
        c.irreducible_certified = v.conclusion == Conclusion::Irreducible;
        if (auto ns = nonsplit_certificate(c.d, a4)) c.nonsplit = *ns;
    });
    std::vector<int> undecided;
    for (size_t i = 0; i < rep.candidates.size(); ++i) {
        auto& c = rep.candidates[i];
        if (c.fate == CompositeFate::Kept && (!c.irreducible_certified || c.nonsplit.empty()))
            undecided.push_back(static_cast<int>(i));
    }
    // move search for a split or reducible form; a diagram with fewer crossings is searched again
    std::vector<Diagram> current;
    std::vector<int> moves_used(undecided.size(), 0);
    for (int i : undecided) current.push_back(rep.candidates[i].d);
    std::vector<size_t> pending(undecided.size());
    std::iota(pending.begin(), pending.end(), 0);
    while (!pending.empty()) {
        std::vector<Diagram> seeds;
        for (size_t k : pending) seeds.push_back(current[k]);
        auto verdicts = reduce_batch(seeds, opt.budget, kRIHMoves);
        std::vector<size_t> again;
        for (size_t t = 0; t < pending.size(); ++t) {
            size_t k = pending[t];
            auto& r = verdicts[t];
            if (r.verdict != Verdict::ReducedTo) continue;
            moves_used[k] += static_cast<int>(r.path.size());
            current[k] = r.reached;
            if (!is_decomposed(r.reached)) {
                again.push_back(k);
                continue;
            }
            auto& c = rep.candidates[undecided[k]];
            bool split = r.reached.g.connected_parts() > 1 ||
                         (r.reached.free_loops > 0 && r.reached.g.vertex_count() > 0);
            c.fate = split ? CompositeFate::Split : CompositeFate::Decomposed;
            c.certificate = std::string(split ? "split" : "reducible") + " form reached by " +
                            std::to_string(moves_used[k]) + " moves";
        }
        pending = std::move(again);
    }
    // the rest: meet a reducible model with the same invariants
    if (!reducible_models.empty()) {
        std::vector<InvariantTuple> minv;
        for (auto& m : reducible_models) minv.push_back(invariant_tuple(m.d, a4, nullptr));
        std::vector<char> grouped(rep.candidates.size(), 0);
        for (int i : undecided) {
            if (grouped[i] || rep.candidates[i].fate != CompositeFate::Kept) continue;
            InvariantTuple key = rep.candidates[i].inv;
            key.ks_a5.reset();
            std::vector<int> group;
            for (int j : undecided) {
                auto& cj = rep.candidates[j];
                if (grouped[j] || cj.fate != CompositeFate::Kept) continue;
                InvariantTuple kj = cj.inv;
                kj.ks_a5.reset();
                if (!kj.same_class(key)) continue;
                grouped[j] = 1;
                group.push_back(j);
            }
            std::vector<Diagram> targets;
            std::vector<int> which;
            for (size_t k = 0; k < reducible_models.size(); ++k)
                if (minv[k].same_class(key)) targets.push_back(reducible_models[k].d), which.push_back(static_cast<int>(k));
            if (targets.empty()) continue;
            std::vector<Diagram> seeds;
            for (int j : group) seeds.push_back(rep.candidates[j].d);
            auto met = meet_batch(seeds, targets, opt.meet_budget, kRIHMoves);
            for (size_t t = 0; t < group.size(); ++t) {
                if (met[t].target < 0) continue;
                auto& c = rep.candidates[group[t]];
                const auto& model = reducible_models[which[met[t].target]];
                bool split = model.d.g.connected_parts() > 1 || (model.d.free_loops > 0 && model.d.g.vertex_count() > 0);
                c.fate = split ? CompositeFate::Split : CompositeFate::Decomposed;
                c.certificate = "equivalent to " + model.name + " (" + std::to_string(met[t].path.size()) + " moves to its closure)";
            }
        }
    }

    // classes of kept candidates by invariant tuple
    std::vector<int> kept;
    for (size_t i = 0; i < rep.candidates.size(); ++i)
        if (rep.candidates[i].fate == CompositeFate::Kept) kept.push_back(static_cast<int>(i));
    std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) {
        return rep.candidates[a].d.crossing_count() < rep.candidates[b].d.crossing_count();
    });
    // candidates agreeing on everything but A5 get A5 computed
    std::vector<char> need(rep.candidates.size(), 0);
    for (size_t a = 0; a < kept.size(); ++a)
        for (size_t b = a + 1; b < kept.size(); ++b)
            if (rep.candidates[kept[a]].inv.same_class(rep.candidates[kept[b]].inv)) need[kept[a]] = need[kept[b]] = 1;
    parallel_for(rep.candidates.size(), opt.workers, [&](size_t i) {
        auto& c = rep.candidates[i];
        if (need[i] && !c.inv.ks_a5) c.inv.ks_a5 = count_hom_classes(presentation_from_diagram(c.d), a5);
    });
    for (int i : kept) {
        auto& c = rep.candidates[i];
        bool placed = false;
        for (auto& cl : rep.classes)
            if (cl.inv.same_class(c.inv)) {
                cl.members.push_back(i);
                placed = true;
                break;
            }
        if (!placed) {
            CompositeClass cl;
            cl.representative = i;
            cl.members = {i};
            cl.inv = c.inv;
            rep.classes.push_back(cl);
        }
    }
    // representative: a certified member with the smallest rank bound
    for (auto& cl : rep.classes) {
        auto score = [&](int m) {
            auto& c = rep.candidates[m];
            return std::make_tuple(!(c.irreducible_certified && !c.nonsplit.empty()), c.inv.rank_bound, c.d.crossing_count());
        };
        for (int m : cl.members)
            if (score(m) < score(cl.representative)) cl.representative = m;
        auto& c = rep.candidates[cl.representative];
        if (!c.inv.ks_a5) c.inv.ks_a5 = count_hom_classes(presentation_from_diagram(c.d), a5);
        cl.inv = c.inv;
        cl.irreducibility = c.irreducible_certified ? "divisibility test" : "open";
        cl.nonsplit = c.nonsplit.empty() ? "open" : c.nonsplit;
    }
    return rep;
}

Order1Census enumerate_order1_census(const std::vector<LinkPoolEntry>& pool, int max_crossings, const GroupTable* a4) {
    Order1Census out;
    std::map<std::pair<std::string, std::string>, Order1Row> rows;
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i; j < pool.size(); ++j) {
            const LinkPoolEntry* l1 = &pool[i];
            const LinkPoolEntry* l2 = &pool[j];
            int c = l1->crossings + l2->crossings;
            if (c > max_crossings || l1->components + l2->components < 3) continue;
            if (std::make_pair(l2->components, l2->crossings) < std::make_pair(l1->components, l1->crossings))
                std::swap(l1, l2);
            Order1Row& row = rows[{l1->family, l2->family}];
            row.left = l1->family, row.right = l2->family, row.crossings = c;
            if (l1->orbits.empty() || l2->orbits.empty()) {
                row.annotated = false;
                continue;
            }
            int o1 = static_cast<int>(l1->orbits.size()), o2 = static_cast<int>(l2->orbits.size());
            int pairs = i == j ? o1 * (o1 + 1) / 2 : o1 * o2;
            // both factors chiral: L1 o L2 and L1 o mirror(L2) differ
            row.count += l1->chiral && l2->chiral ? 2 * pairs : pairs;
            if (!l1->d || !l2->d) continue;

            auto name = [](const LinkPoolEntry& l, int comp, bool mirrored) {
                return (mirrored ? "mirror " : "") + l.name + "[" + std::to_string(comp) + "]";
            };
            for (int a = 0; a < l1->components; ++a)
                for (int b = 0; b < l2->components; ++b)
                    for (int m = 0; m < 2; ++m)
                        out.models.push_back({name(*l1, a, false) + " o " + name(*l2, b, m == 1),
                                              order1_sum(*l1->d, a, m ? mirror(*l2->d) : *l2->d, b)});
            if (!a4) continue;
            std::vector<InvariantTuple> seen;
            for (int x = 0; x < o1; ++x)
                for (int y = i == j ? x : 0; y < o2; ++y) {
                    auto t = invariant_tuple(order1_sum(*l1->d, l1->orbits[x][0], *l2->d, l2->orbits[y][0]), *a4, nullptr);
                    ++row.pairs_built;
                    bool fresh = true;
                    for (auto& u : seen) fresh = fresh && !u.same_class(t);
                    if (fresh) ++row.pairs_separated, seen.push_back(t);
                    // the other members of each orbit must look the same
                    for (int a : l1->orbits[x])
                        for (int b : l2->orbits[y]) {
                            if (a == l1->orbits[x][0] && b == l2->orbits[y][0]) continue;
                            auto u = invariant_tuple(order1_sum(*l1->d, a, *l2->d, b), *a4, nullptr);
                            if (!u.same_class(t)) row.orbits_consistent = false;
                        }
                }
        }
    for (auto& [key, row] : rows) out.rows.push_back(row);
    std::stable_sort(out.rows.begin(), out.rows.end(),
                     [](const Order1Row& a, const Order1Row& b) { return a.crossings < b.crossings; });
    for (auto& row : out.rows) out.totals[row.crossings] += row.count;
    return out;
}

}  // namespace hlc
