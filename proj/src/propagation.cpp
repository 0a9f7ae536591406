#include "hlc/propagation.hpp"

#include <algorithm>
#include <cstdlib>

namespace hlc {

namespace {

// distinct-unknown analysis of a relator under the known mask
// returns the unique unknown generator if it occurs once, 0 if none unknown, -1 otherwise
int single_unknown(const Word& r, const std::vector<char>& known) {
    int found = 0, occ = 0;
    for (int x : r) {
        int a = std::abs(x);
        if (known[a]) continue;
        if (found && found != a) return -1;
        found = a;
        ++occ;
    }
    if (!found) return 0;
    return occ == 1 ? found : -1;
}

}  // namespace

SeedPlan propagate(int gens, const std::vector<Word>& rels, const std::vector<int>& seeds) {
    SeedPlan plan;
    plan.seeds = seeds;
    std::vector<char> known(gens + 1, 0), used(rels.size(), 0);
    int nknown = 0;
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (!known[seeds[i]]) known[seeds[i]] = 1, ++nknown;
        plan.levels.emplace_back();
        plan.checks.emplace_back();
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t r = 0; r < rels.size(); ++r) {
                if (used[r]) continue;
                int u = single_unknown(rels[r], known);
                if (u > 0) {
                    Derivation d{u, static_cast<int>(r)};
                    plan.levels.back().push_back(d);
                    plan.derivations.push_back(d);
                    known[u] = 1, ++nknown;
                    used[r] = 1;
                    progress = true;
                } else if (u == 0) {
                    plan.checks.back().push_back(static_cast<int>(r));
                    used[r] = 1;
                }
            }
        }
    }
    // generators occurring in no relator still count once seeded
    plan.complete = nknown == gens;
    if (plan.complete)
        for (size_t r = 0; r < rels.size(); ++r)
            if (!used[r]) plan.complete = false;
    return plan;
}

SeedPlan minimum_seed_plan(int gens, const std::vector<Word>& rels, int effort) {
    if (gens == 0) {
        SeedPlan p;
        p.complete = true;
        return p;
    }
    long long budget = static_cast<long long>(effort) * 64;
    for (int k = 1; k <= gens && budget > 0; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        while (budget-- > 0) {
            auto plan = propagate(gens, rels, idx);
            if (plan.complete) return plan;
            int i = k - 1;
            while (i >= 0 && idx[i] == gens - (k - 1 - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // greedy: add the generator that unlocks the most
    std::vector<int> seeds;
    while (true) {
        auto cur = propagate(gens, rels, seeds);
        if (cur.complete && !seeds.empty()) return cur;
        std::vector<char> known(gens + 1, 0);
        for (int s : seeds) known[s] = 1;
        for (auto& d : cur.derivations) known[d.gen] = 1;
        int best = -1;
        size_t best_reach = 0;
        for (int x = 1; x <= gens; ++x) {
            if (known[x]) continue;
            auto s2 = seeds;
            s2.push_back(x);
            auto p = propagate(gens, rels, s2);
            size_t reach = p.derivations.size();
            if (best < 0 || reach > best_reach) best = x, best_reach = reach;
        }
        if (best < 0) return cur;
        seeds.push_back(best);
    }
}

}  // namespace hlc
