#include "hlc/reduce.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace hlc {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ReducedTo: return "reduced";
        case Verdict::Survivor: return "survivor";
        default: return "inconclusive";
    }
}

namespace {

struct Node {
    int search;
    int parent;     // node index, -1 for a seed
    MoveStep step;  // move from parent
};

struct Item {
    int crossings;
    long seq;
    int node;
    Diagram d;
};

struct ItemOrder {
    bool operator()(const Item& a, const Item& b) const {
        return a.crossings != b.crossings ? a.crossings > b.crossings : a.seq > b.seq;
    }
};

struct Shared {
    std::unordered_map<Hash128, int, Hash128Hasher> seen;  // code hash -> node
    std::vector<Node> nodes;
    std::vector<int> uf;  // union-find over searches
    std::vector<Verdict> status;
    std::vector<int> class_of;

    int find(int s) {
        while (uf[s] != s) s = uf[s] = uf[uf[s]];
        return s;
    }
};

std::vector<MoveStep> path_to(const Shared& sh, int node) {
    std::vector<MoveStep> p;
    while (node >= 0 && sh.nodes[node].parent >= 0) {
        p.push_back(sh.nodes[node].step);
        node = sh.nodes[node].parent;
    }
    std::reverse(p.begin(), p.end());
    return p;
}

bool reduces(const Diagram& d, int c0) { return d.crossing_count() < c0 || is_decomposed(d); }

ReduceResult run(Shared& sh, const Diagram& seed, Budget budget, MoveSet moves) {
    ReduceResult res;
    int c0 = seed.crossing_count();
    int cap = budget.max_crossings < 0 ? c0 + 2 : budget.max_crossings;
    Hash128 h0 = hash_code(diagram_code(seed, true));
    auto hit = sh.seen.find(h0);
    if (hit != sh.seen.end()) {
        int root = sh.find(sh.nodes[hit->second].search);
        if (sh.status[root] != Verdict::Inconclusive) {
            res.verdict = sh.status[root];
            res.class_id = sh.class_of[root];
            return res;
        }
    }
    int me = static_cast<int>(sh.uf.size());
    sh.uf.push_back(me);
    sh.status.push_back(Verdict::Inconclusive);
    sh.class_of.push_back(-1);
    auto finish = [&](Verdict v) {
        int r = sh.find(me);
        sh.status[r] = v;
        res.verdict = v;
        if (v == Verdict::Survivor) {
            if (sh.class_of[r] < 0) {
                int next = 0;
                for (int c : sh.class_of) next = std::max(next, c + 1);
                sh.class_of[r] = next;
            }
            res.class_id = sh.class_of[r];
        }
        return res;
    };
    if (is_decomposed(seed)) {
        res.reached = seed;
        return finish(Verdict::ReducedTo);
    }
    std::priority_queue<Item, std::vector<Item>, ItemOrder> pq;
    long seq = 0;
    int seed_node;
    if (hit == sh.seen.end()) {
        seed_node = static_cast<int>(sh.nodes.size());
        sh.nodes.push_back({me, -1, {}});
        sh.seen.emplace(h0, seed_node);
    } else {
        seed_node = hit->second;
        sh.uf[sh.find(sh.nodes[seed_node].search)] = me;
    }
    pq.push({c0, seq++, seed_node, seed});
    std::size_t fresh = 1;
    bool done = false;
    while (!pq.empty() && !done) {
        Item it = pq.top();
        pq.pop();
        int from = it.node;
        for_each_neighbor(it.d, moves, cap, [&](Diagram&& nb, const MoveStep& st) {
            if (done) return;
            Hash128 h = hash_code(diagram_code(nb, true));
            auto f = sh.seen.find(h);
            if (f != sh.seen.end()) {
                int other = sh.find(sh.nodes[f->second].search);
                int mine = sh.find(me);
                if (other == mine) return;
                if (sh.status[other] == Verdict::ReducedTo) {
                    sh.uf[mine] = other;
                    res.reached = nb;
                    res.path = path_to(sh, from);
                    res.path.push_back(st);
                    res.verdict = Verdict::ReducedTo;
                    done = true;
                } else if (sh.status[other] == Verdict::Survivor) {
                    // a completed class that never reduced: this seed belongs to it
                    sh.uf[mine] = other;
                    res.verdict = Verdict::Survivor;
                    res.class_id = sh.class_of[other];
                    done = true;
                } else {
                    sh.uf[other] = mine;
                }
                return;
            }
            int id = static_cast<int>(sh.nodes.size());
            sh.nodes.push_back({me, from, st});
            sh.seen.emplace(h, id);
            ++fresh;
            if (reduces(nb, c0)) {
                res.path = path_to(sh, id);
                res.reached = std::move(nb);
                res.verdict = Verdict::ReducedTo;
                done = true;
                return;
            }
            pq.push({nb.crossing_count(), seq++, id, std::move(nb)});
        });
        if (!done && fresh >= budget.max_states) break;
    }
    res.states = fresh;
    if (done) {
        int r = sh.find(me);
        sh.status[r] = res.verdict;
        if (res.verdict == Verdict::Survivor) sh.class_of[r] = res.class_id;
        return res;
    }
    if (!pq.empty()) return finish(Verdict::Inconclusive);
    return finish(Verdict::Survivor);
}

}  // namespace

ReduceResult reduce_search(const Diagram& d, Budget budget, MoveSet moves) {
    Shared sh;
    auto r = run(sh, d, budget, moves);
    r.class_id = r.verdict == Verdict::Survivor ? 0 : -1;
    return r;
}

std::vector<ReduceResult> reduce_batch(const std::vector<Diagram>& seeds, Budget budget, MoveSet moves) {
    // meeting another search is only meaningful between seeds of equal crossing number
    std::map<int, Shared> by_c;
    std::vector<ReduceResult> out;
    for (auto& d : seeds) out.push_back(run(by_c[d.crossing_count()], d, budget, moves));
    std::map<std::pair<int, int>, int> ids;
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].verdict != Verdict::Survivor) continue;
        auto key = std::make_pair(seeds[i].crossing_count(), out[i].class_id);
        auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
        out[i].class_id = it->second;
    }
    return out;
}

std::vector<MeetResult> meet_batch(const std::vector<Diagram>& seeds, const std::vector<Diagram>& targets, Budget budget,
                                   MoveSet moves, bool up_to_mirror) {
    int cap = budget.max_crossings;
    if (cap < 0) {
        cap = 0;
        for (auto& t : targets) cap = std::max(cap, t.crossing_count());
        for (auto& d : seeds) cap = std::max(cap, d.crossing_count());
        cap += 2;
    }
    std::size_t half = budget.max_states / 2;

    std::unordered_map<Hash128, int, Hash128Hasher> mark;
    {
        std::priority_queue<Item, std::vector<Item>, ItemOrder> pq;
        long seq = 0;
        for (size_t i = 0; i < targets.size(); ++i)
            if (mark.emplace(hash_code(diagram_code(targets[i], up_to_mirror)), static_cast<int>(i)).second)
                pq.push({targets[i].crossing_count(), seq++, static_cast<int>(i), targets[i]});
        while (!pq.empty() && mark.size() < half) {
            Item it = pq.top();
            pq.pop();
            for_each_neighbor(it.d, moves, cap, [&](Diagram&& nb, const MoveStep&) {
                if (mark.emplace(hash_code(diagram_code(nb, up_to_mirror)), it.node).second)
                    pq.push({nb.crossing_count(), seq++, it.node, std::move(nb)});
            });
        }
    }

    std::vector<MeetResult> out;
    for (auto& d : seeds) {
        MeetResult res;
        std::unordered_map<Hash128, int, Hash128Hasher> seen;
        std::vector<std::pair<int, MoveStep>> nodes;  // parent, step
        auto trace = [&](int node) {
            std::vector<MoveStep> p;
            for (; node >= 0 && nodes[node].first >= 0; node = nodes[node].first) p.push_back(nodes[node].second);
            std::reverse(p.begin(), p.end());
            return p;
        };
        Hash128 h0 = hash_code(diagram_code(d, up_to_mirror));
        if (auto m = mark.find(h0); m != mark.end()) {
            res.target = m->second;
            out.push_back(res);
            continue;
        }
        std::priority_queue<Item, std::vector<Item>, ItemOrder> pq;
        long seq = 0;
        seen.emplace(h0, 0);
        nodes.push_back({-1, {}});
        pq.push({d.crossing_count(), seq++, 0, d});
        bool done = false;
        while (!pq.empty() && !done && nodes.size() < half) {
            Item it = pq.top();
            pq.pop();
            for_each_neighbor(it.d, moves, cap, [&](Diagram&& nb, const MoveStep& st) {
                if (done) return;
                Hash128 h = hash_code(diagram_code(nb, up_to_mirror));
                if (!seen.emplace(h, static_cast<int>(nodes.size())).second) return;
                nodes.push_back({it.node, st});
                if (auto m = mark.find(h); m != mark.end()) {
                    res.target = m->second;
                    res.path = trace(static_cast<int>(nodes.size()) - 1);
                    done = true;
                    return;
                }
                pq.push({nb.crossing_count(), seq++, static_cast<int>(nodes.size()) - 1, std::move(nb)});
            });
        }
        res.states = nodes.size() + mark.size();
        out.push_back(std::move(res));
    }
    return out;
}

MeetResult meet_search(const Diagram& d, const std::vector<Diagram>& targets, Budget budget, MoveSet moves,
                       bool up_to_mirror) {
    return meet_batch({d}, targets, budget, moves, up_to_mirror).front();
}

}  // namespace hlc
