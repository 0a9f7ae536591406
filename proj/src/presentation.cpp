#include "hlc/presentation.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hlc/propagation.hpp"

namespace hlc {

bool Presentation::is_valid() const {
    auto ok = [&](const Word& w) {
        for (int x : w)
            if (x == 0 || std::abs(x) > gens) return false;
        return true;
    };
    for (auto& r : rels)
        if (!ok(r)) return false;
    for (auto& p : peripheral)
        if (!ok(p.m) || !ok(p.l)) return false;
    return true;
}

Word inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& x : r) x = -x;
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word free_reduce(Word w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) ++i, --j;
    return Word(w.begin() + i, w.begin() + j);
}

Word parse_word(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '.', ' ');
    std::stringstream ss(t);
    Word w;
    int x;
    while (ss >> x) {
        if (x == 0) throw std::invalid_argument("word letters are non-zero signed indices");
        w.push_back(x);
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << w[i];
    return os.str();
}

// ------------------------------------------------------------- Wirtinger

namespace {

struct ArcData {
    std::vector<int> arc_of;  // generator (1-based) per slot
    int count = 0;
};

ArcData arcs(const Diagram& d) {
    const auto& g = d.g;
    int n = g.slot_count();
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    auto unite = [&](int a, int b) {
        a = find(a), b = find(b);
        if (a != b) par[std::max(a, b)] = std::min(a, b);
    };
    for (int s = 0; s < n; ++s) {
        if (!g.used(s)) continue;
        unite(s, g.link[s]);
        if (g.deg[vert_of(s)] == 4 && (pos_of(s) & 1)) unite(s, opposite(s));
    }
    ArcData a;
    a.arc_of.assign(n, 0);
    std::map<int, int> id;
    for (int s = 0; s < n; ++s) {
        if (!g.used(s)) continue;
        int r = find(s);
        auto it = id.find(r);
        if (it == id.end()) it = id.emplace(r, ++a.count).first;
        a.arc_of[s] = it->second;
    }
    return a;
}

int component_start(const Diagram& d, const Components& c, int comp) {
    for (int s = 0; s < d.g.slot_count(); ++s)
        if (d.g.used(s) && c.of_slot[s] == comp) return s;
    return -1;
}

}  // namespace

std::pair<Word, Word> peripheral_words(const Diagram& d, int comp) {
    auto comps = trace_components(d);
    if (comp < 0 || comp >= comps.count) throw std::invalid_argument("peripheral_words: component not found");
    if (comps.trivalent[comp] > 0) throw std::invalid_argument("peripheral_words: component has a trivalent vertex");
    auto A = arcs(d);
    if (comps.free_loop[comp]) {
        // free loops get generators after the arcs, in order
        int k = 0;
        for (int c = 0; c < comp; ++c) k += comps.free_loop[c];
        return {Word{A.count + 1 + k}, Word{}};
    }
    const auto& g = d.g;
    auto o = orientation(d);
    int s0 = component_start(d, comps, comp);
    Word m{A.arc_of[s0]}, l;
    int w = 0;
    int s = s0;
    do {
        int t = g.link[s];
        int v = vert_of(t);
        int eps = crossing_sign(d, o, v);
        if (is_under(t)) {
            l.push_back(eps * A.arc_of[slot(v, 1)]);
            if (comps.of_slot[slot(v, 1)] == comp) w += eps;
        }
        s = opposite(t);
    } while (s != s0);
    for (int i = 0; i < std::abs(w); ++i) l.push_back(w > 0 ? -m[0] : m[0]);
    return {m, free_reduce(l)};
}

Presentation presentation_from_diagram(const Diagram& d) {
    const auto& g = d.g;
    auto A = arcs(d);
    auto o = orientation(d);
    Presentation p;
    p.gens = A.count + d.free_loops;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.deg[v] == 4) {
            int in = o[slot(v, 0)] < 0 ? slot(v, 0) : slot(v, 2);
            int out = opposite(in);
            int xo = A.arc_of[slot(v, 1)];
            int eps = crossing_sign(d, o, v);
            // x_out = x_o^{-eps} x_in x_o^{eps}
            p.rels.push_back({-A.arc_of[out], -eps * xo, A.arc_of[in], eps * xo});
        } else {
            Word r;
            for (int k = 0; k < 3; ++k) r.push_back(o[slot(v, k)] * A.arc_of[slot(v, k)]);
            p.rels.push_back(r);
        }
    }
    auto comps = trace_components(d);
    for (int c = 0; c < comps.count; ++c) {
        if (comps.trivalent[c] > 0) continue;
        auto [m, l] = peripheral_words(d, c);
        p.peripheral.push_back({c, m, l});
    }
    return p;
}

// --------------------------------------------------------- abelianization

int abelianization_rank(const Presentation& p) {
    int n = p.gens;
    std::vector<std::vector<long long>> M;
    for (auto& r : p.rels) {
        std::vector<long long> row(n, 0);
        for (int x : r) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
        M.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(M.size()); ++col) {
        // gcd-style elimination keeps entries integral
        while (true) {
            int piv = -1;
            for (int i = rank; i < static_cast<int>(M.size()); ++i)
                if (M[i][col] != 0 && (piv < 0 || std::llabs(M[i][col]) < std::llabs(M[piv][col]))) piv = i;
            if (piv < 0) break;
            std::swap(M[rank], M[piv]);
            bool clean = true;
            for (int i = rank + 1; i < static_cast<int>(M.size()); ++i) {
                if (M[i][col] == 0) continue;
                long long q = M[i][col] / M[rank][col];
                for (int j = col; j < n; ++j) M[i][j] -= q * M[rank][j];
                if (M[i][col] != 0) clean = false;
            }
            if (clean) {
                ++rank;
                break;
            }
        }
    }
    return n - rank;
}

// ------------------------------------------------------------------ Tietze

namespace {

struct Work {
    int gens;
    std::vector<Word> rels;
    std::vector<Peripheral> per;
};

Word substitute(const Word& w, int x, const Word& value) {
    Word out;
    for (int y : w) {
        if (std::abs(y) != x) {
            out.push_back(y);
            continue;
        }
        const Word& v = value;
        if (y > 0) out.insert(out.end(), v.begin(), v.end());
        else {
            Word iv = inverse(v);
            out.insert(out.end(), iv.begin(), iv.end());
        }
    }
    return free_reduce(out);
}

// canonical representative of a relator up to cyclic permutation and inversion
Word relator_key(const Word& w) {
    Word best;
    for (int pass = 0; pass < 2; ++pass) {
        Word u = pass ? inverse(w) : w;
        for (size_t i = 0; i < u.size(); ++i) {
            Word r(u.begin() + i, u.end());
            r.insert(r.end(), u.begin(), u.begin() + i);
            if (best.empty() || r < best) best = r;
        }
    }
    return best;
}

void tidy(Work& w) {
    std::set<Word> seen;
    std::vector<Word> keep;
    for (auto& r : w.rels) {
        Word c = cyclic_reduce(r);
        if (c.empty()) continue;
        Word k = relator_key(c);
        if (seen.insert(k).second) keep.push_back(c);
    }
    std::sort(keep.begin(), keep.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    w.rels = std::move(keep);
}

// x occurs exactly once in r: solve r = 1 for x
bool solve_for(const Word& r, int x, Word& value) {
    int at = -1;
    for (size_t i = 0; i < r.size(); ++i)
        if (std::abs(r[i]) == x) {
            if (at >= 0) return false;
            at = static_cast<int>(i);
        }
    if (at < 0) return false;
    // rotate so that the letter is last: u x^e = 1  =>  x^e = u^{-1}
    Word u(r.begin() + at + 1, r.end());
    u.insert(u.end(), r.begin(), r.begin() + at);
    Word xe = inverse(u);
    value = r[at] > 0 ? xe : inverse(xe);
    return true;
}

void eliminate(Work& w, int x, size_t rel_index, const Word& value) {
    w.rels.erase(w.rels.begin() + static_cast<long>(rel_index));
    for (auto& r : w.rels) r = substitute(r, x, value);
    for (auto& p : w.per) p.m = substitute(p.m, x, value), p.l = substitute(p.l, x, value);
    // renumber: generator gens takes x's place
    int last = w.gens;
    auto ren = [&](Word& word) {
        for (int& y : word)
            if (std::abs(y) == last) y = y > 0 ? x : -x;
    };
    if (x != last) {
        for (auto& r : w.rels) ren(r);
        for (auto& p : w.per) ren(p.m), ren(p.l);
    }
    w.gens--;
}

size_t total_length(const Work& w) {
    size_t t = 0;
    for (auto& r : w.rels) t += r.size();
    return t;
}

// repeatedly eliminate the generator whose removal keeps relators shortest
void greedy(Work& w, std::mt19937& rng, bool randomized, int& budget) {
    while (budget-- > 0) {
        tidy(w);
        struct Cand {
            int x;
            size_t ri;
            Word value;
            size_t cost;
        };
        std::vector<Cand> cands;
        for (size_t ri = 0; ri < w.rels.size(); ++ri)
            for (int x = 1; x <= w.gens; ++x) {
                Word val;
                if (!solve_for(w.rels[ri], x, val)) continue;
                size_t occ = 0;
                for (size_t rj = 0; rj < w.rels.size(); ++rj)
                    if (rj != ri)
                        for (int y : w.rels[rj]) occ += std::abs(y) == x;
                cands.push_back({x, ri, val, occ * val.size()});
            }
        if (cands.empty()) return;
        size_t pick = 0;
        if (randomized) {
            pick = std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng);
        } else {
            for (size_t i = 1; i < cands.size(); ++i)
                if (cands[i].cost < cands[pick].cost) pick = i;
        }
        eliminate(w, cands[pick].x, cands[pick].ri, cands[pick].value);
    }
}

Presentation to_presentation(const Work& w) {
    Presentation p;
    p.gens = w.gens;
    p.rels = w.rels;
    p.peripheral = w.per;
    return p;
}

}  // namespace

Presentation tietze_simplify(const Presentation& in, int effort) {
    Work base{in.gens, in.rels, in.peripheral};
    tidy(base);
    std::mt19937 rng(12345);
    Work best;
    bool have = false;
    auto consider = [&](Work w) {
        tidy(w);
        if (!have || w.gens < best.gens || (w.gens == best.gens && total_length(w) < total_length(best))) {
            best = std::move(w);
            have = true;
        }
    };
    int budget = effort;
    // route 1: smallest generating set found by relator propagation
    {
        auto plan = minimum_seed_plan(in.gens, base.rels, effort);
        if (plan.complete) {
            Work w = base;
            // eliminate derived generators in reverse plan order by their defining relators
            std::vector<Word> values(in.gens + 1);
            std::vector<char> is_seed(in.gens + 1, 0);
            for (int s : plan.seeds) is_seed[s] = 1;
            Work sub{static_cast<int>(plan.seeds.size()), {}, {}};
            std::vector<int> new_index(in.gens + 1, 0);
            for (size_t i = 0; i < plan.seeds.size(); ++i) {
                new_index[plan.seeds[i]] = static_cast<int>(i) + 1;
                values[plan.seeds[i]] = Word{static_cast<int>(i) + 1};
            }
            auto express = [&](const Word& word) {
                Word out;
                for (int y : word) {
                    const Word& v = values[std::abs(y)];
                    if (y > 0) out.insert(out.end(), v.begin(), v.end());
                    else {
                        Word iv = inverse(v);
                        out.insert(out.end(), iv.begin(), iv.end());
                    }
                }
                return free_reduce(out);
            };
            std::vector<char> used(base.rels.size(), 0);
            bool ok = true;
            for (auto& st : plan.derivations) {
                Word val;
                if (!solve_for(base.rels[st.relator], st.gen, val)) { ok = false; break; }
                values[st.gen] = express(val);
                used[st.relator] = 1;
                if (values[st.gen].size() > 4096) { ok = false; break; }
            }
            if (ok) {
                for (size_t ri = 0; ri < base.rels.size(); ++ri)
                    if (!used[ri]) sub.rels.push_back(express(base.rels[ri]));
                for (auto& p : base.per) sub.per.push_back({p.comp, express(p.m), express(p.l)});
                int b = budget;
                greedy(sub, rng, false, b);
                consider(sub);
            }
        }
    }
    // route 2: greedy elimination, deterministic then randomized restarts
    {
        Work w = base;
        int b = budget;
        greedy(w, rng, false, b);
        consider(w);
    }
    for (int round = 0; round < 8 && budget > 0; ++round) {
        Work w = base;
        int b = std::max(1, budget / 8);
        greedy(w, rng, true, b);
        budget -= std::max(1, effort / 8);
        consider(w);
    }
    // route 3: Nielsen substitutions x_a -> x_a x_b^e or x_b^e x_a, up to depth 2,
    // each followed by greedy elimination
    {
        std::vector<Work> layer{best};
        for (int depth = 0; depth < 2 && best.gens > 1; ++depth) {
            std::vector<Work> next;
            for (auto& w0 : layer)
                for (int a = 1; a <= w0.gens; ++a)
                    for (int b = 1; b <= w0.gens; ++b)
                        for (int form = 0; form < 4 && a != b; ++form) {
                            int e = form & 1 ? -1 : 1;
                            Word value = form & 2 ? Word{e * b, a} : Word{a, e * b};
                            Work w = w0;
                            for (auto& r : w.rels) r = substitute(r, a, value);
                            for (auto& pr : w.per) pr.m = substitute(pr.m, a, value), pr.l = substitute(pr.l, a, value);
                            tidy(w);
                            if (total_length(w) > 4 * total_length(w0) + 16) continue;
                            Work g = w;
                            int b2 = effort;
                            greedy(g, rng, false, b2);
                            consider(g);
                            if (depth == 0) next.push_back(std::move(w));
                        }
            layer = std::move(next);
        }
    }
    return to_presentation(best);
}

// ------------------------------------------------------------------- text

std::string to_text(const Presentation& p) {
    std::ostringstream os;
    os << "# hlc-presentation v1\n";
    os << "gens " << p.gens << "\n";
    for (auto& r : p.rels) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << "\n";
    }
    for (auto& per : p.peripheral)
        os << "peripheral comp=" << per.comp << " m=" << word_to_string(per.m) << " l=" << word_to_string(per.l) << "\n";
    return os.str();
}

Presentation presentation_from_text(std::istream& in) {
    Presentation p;
    std::string line;
    bool have_gens = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("gens", 0) == 0) {
            p.gens = std::stoi(line.substr(4));
            have_gens = true;
            continue;
        }
        if (!have_gens) throw std::runtime_error("presentation: 'gens N' must come first");
        if (line.rfind("peripheral", 0) == 0) {
            Peripheral per;
            std::stringstream ss(line.substr(10));
            std::string tok;
            while (ss >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "comp") per.comp = std::stoi(val);
                else if (key == "m") per.m = parse_word(val);
                else if (key == "l") per.l = parse_word(val);
            }
            p.peripheral.push_back(per);
            continue;
        }
        p.rels.push_back(parse_word(line));
    }
    if (!p.is_valid()) throw std::runtime_error("presentation: relator references an invalid generator");
    return p;
}

}  // namespace hlc
