#include "hlc/homcount.hpp"

#include <cstdlib>
#include <stdexcept>

#include "hlc/propagation.hpp"

namespace hlc {

namespace {

struct Step {
    int gen;
    int sign;      // x^sign closes the rotated word
    Word prefix;   // letters before x in the rotation
};

struct Program {
    int gens = 0;
    std::vector<int> seeds;
    std::vector<std::vector<Step>> derive;  // per level
    std::vector<std::vector<Word>> check;   // per level
};

Program compile(const Presentation& p, const std::vector<Word>& extra) {
    std::vector<Word> rels;
    for (auto& r : p.rels) {
        Word c = cyclic_reduce(r);
        if (!c.empty()) rels.push_back(c);
    }
    for (auto& r : extra) {
        Word c = cyclic_reduce(r);
        if (!c.empty()) rels.push_back(c);
    }
    Program prog;
    prog.gens = p.gens;
    if (p.gens == 0) {
        prog.check.push_back(rels);
        return prog;
    }
    auto plan = minimum_seed_plan(p.gens, rels);
    if (!plan.complete) throw std::logic_error("hom count: propagation plan incomplete");
    prog.seeds = plan.seeds;
    for (size_t lv = 0; lv < plan.levels.size(); ++lv) {
        prog.derive.emplace_back();
        for (auto& d : plan.levels[lv]) {
            const Word& r = rels[d.relator];
            size_t at = 0;
            while (std::abs(r[at]) != d.gen) ++at;
            Step s{d.gen, r[at] > 0 ? 1 : -1, {}};
            // r = A x^e B ~ B A x^e
            s.prefix.assign(r.begin() + static_cast<long>(at) + 1, r.end());
            s.prefix.insert(s.prefix.end(), r.begin(), r.begin() + static_cast<long>(at));
            prog.derive.back().push_back(s);
        }
        prog.check.emplace_back();
        for (int ri : plan.checks[lv]) prog.check.back().push_back(rels[ri]);
    }
    return prog;
}

struct Evaluator {
    const GroupTable& g;
    std::vector<int> val;

    int eval(const Word& w) const {
        int acc = 0;
        for (int x : w) {
            int v = val[std::abs(x)];
            acc = g.m(acc, x > 0 ? v : g.inv[v]);
        }
        return acc;
    }
    // run the level; false if a check fails
    bool run(const Program& P, size_t lv) {
        for (auto& s : P.derive[lv]) {
            int u = eval(s.prefix);
            // u x^e = 1
            val[s.gen] = s.sign > 0 ? g.inv[u] : u;
        }
        for (auto& r : P.check[lv])
            if (eval(r) != 0) return false;
        return true;
    }
};

int stabilizer_size(const GroupTable& g, const std::vector<int>& val, const std::vector<int>& seeds) {
    if (g.has_masks()) {
        uint64_t m = ~0ULL;
        for (int s : seeds) m &= g.centralizer_mask[val[s]];
        if (g.order < 64) m &= (1ULL << g.order) - 1;
        return __builtin_popcountll(m);
    }
    int c = 0;
    for (int h = 0; h < g.order; ++h) {
        bool ok = true;
        for (int s : seeds)
            if (g.m(h, val[s]) != g.m(val[s], h)) { ok = false; break; }
        c += ok;
    }
    return c;
}

// visits every homomorphism whose seeds lie in the allowed sets; leaf(val) per hit
template <class Leaf>
void search(const Program& P, Evaluator& ev, size_t lv, const std::vector<std::vector<int>>& domain, Leaf&& leaf) {
    if (lv == P.seeds.size()) {
        leaf(ev.val);
        return;
    }
    for (int a : domain[lv]) {
        ev.val[P.seeds[lv]] = a;
        if (ev.run(P, lv)) search(P, ev, lv + 1, domain, leaf);
    }
}

uint64_t count_classes(const Presentation& p, const GroupTable& g, const std::vector<Word>& extra) {
    Program P = compile(p, extra);
    Evaluator ev{g, std::vector<int>(p.gens + 1, 0)};
    if (P.seeds.empty()) {
        for (auto& r : P.check.empty() ? std::vector<Word>{} : P.check[0])
            if (ev.eval(r) != 0) return 0;
        return 1;
    }
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    std::vector<std::vector<int>> domain(P.seeds.size(), all);
    unsigned __int128 total = 0;
    for (int ci = 0; ci < g.class_count(); ++ci) {
        domain[0] = {g.reps[ci]};
        uint64_t stab = 0;
        search(P, ev, 0, domain, [&](const std::vector<int>& val) { stab += stabilizer_size(g, val, P.seeds); });
        total += static_cast<unsigned __int128>(stab) * static_cast<unsigned>(g.class_size[ci]);
    }
    if (total % static_cast<unsigned>(g.order) != 0) throw std::logic_error("hom count: orbit sum not divisible by |G|");
    return static_cast<uint64_t>(total / static_cast<unsigned>(g.order));
}

}  // namespace

uint64_t count_homs(const Presentation& p, const GroupTable& g) {
    Program P = compile(p, {});
    Evaluator ev{g, std::vector<int>(p.gens + 1, 0)};
    if (P.seeds.empty()) return count_hom_classes(p, g);
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    std::vector<std::vector<int>> domain(P.seeds.size(), all);
    uint64_t total = 0;
    for (int ci = 0; ci < g.class_count(); ++ci) {
        // conjugating the whole homomorphism moves the first seed around its class
        domain[0] = {g.reps[ci]};
        uint64_t hits = 0;
        search(P, ev, 0, domain, [&](const std::vector<int>&) { ++hits; });
        total += hits * static_cast<uint64_t>(g.class_size[ci]);
    }
    return total;
}

uint64_t count_hom_classes(const Presentation& p, const GroupTable& g) { return count_classes(p, g, {}); }

uint64_t count_constrained_classes(const Presentation& p, const GroupTable& g, const Word& kill) {
    for (int x : kill)
        if (x == 0 || std::abs(x) > p.gens) throw std::invalid_argument("kill word references an invalid generator");
    return count_classes(p, g, {kill});
}

uint64_t count_hom_classes_burnside(const Presentation& p, const GroupTable& g) {
    Program P = compile(p, {});
    Evaluator ev{g, std::vector<int>(p.gens + 1, 0)};
    if (P.seeds.empty()) return count_hom_classes(p, g);
    unsigned __int128 total = 0;
    for (int h = 0; h < g.order; ++h) {
        std::vector<int> cent;
        for (int a = 0; a < g.order; ++a)
            if (g.m(a, h) == g.m(h, a)) cent.push_back(a);
        std::vector<std::vector<int>> domain(P.seeds.size(), cent);
        uint64_t hits = 0;
        // derived generators are words in the seeds, so they also commute with h
        search(P, ev, 0, domain, [&](const std::vector<int>&) { ++hits; });
        total += hits;
    }
    if (total % static_cast<unsigned>(g.order) != 0) throw std::logic_error("Burnside count not divisible by |G|");
    return static_cast<uint64_t>(total / static_cast<unsigned>(g.order));
}

uint64_t count_hom_classes_direct(const Presentation& p, const GroupTable& g) {
    Program P = compile(p, {});
    Evaluator ev{g, std::vector<int>(p.gens + 1, 0)};
    if (P.seeds.empty()) return count_hom_classes(p, g);
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    std::vector<std::vector<int>> domain(P.seeds.size(), all);
    uint64_t orbits = 0;
    std::vector<int> img(P.seeds.size());
    search(P, ev, 0, domain, [&](const std::vector<int>& val) {
        // the seed tuple determines the homomorphism; count lexicographic orbit minima
        for (int h = 1; h < g.order; ++h) {
            for (size_t i = 0; i < P.seeds.size(); ++i) img[i] = g.m(g.m(h, val[P.seeds[i]]), g.inv[h]);
            for (size_t i = 0; i < P.seeds.size(); ++i) {
                int a = val[P.seeds[i]];
                if (img[i] < a) return;
                if (img[i] > a) break;
            }
        }
        ++orbits;
    });
    return orbits;
}

}  // namespace hlc
