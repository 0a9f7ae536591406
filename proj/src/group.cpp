#include "hlc/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlc {

namespace {

void finish_classes(GroupTable& g) {
    int n = g.order;
    g.cls.assign(n, -1);
    g.class_size.clear();
    g.reps.clear();
    for (int a = 0; a < n; ++a) {
        if (g.cls[a] >= 0) continue;
        int id = static_cast<int>(g.reps.size());
        g.reps.push_back(a);
        g.class_size.push_back(0);
        for (int h = 0; h < n; ++h) {
            int c = g.m(g.m(h, a), g.inv[h]);
            if (g.cls[c] < 0) g.cls[c] = id, g.class_size[id]++;
        }
    }
    g.centralizer_order.assign(n, 0);
    if (n <= 64) g.centralizer_mask.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int h = 0; h < n; ++h)
            if (g.m(a, h) == g.m(h, a)) {
                g.centralizer_order[a]++;
                if (n <= 64) g.centralizer_mask[a] |= 1ULL << h;
            }
}

GroupTable from_permutations(std::vector<std::vector<int>> perms, const std::string& name) {
    std::sort(perms.begin(), perms.end());  // identity sorts first
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    GroupTable g;
    g.name = name;
    g.order = static_cast<int>(perms.size());
    g.mul.resize(g.order * g.order);
    g.inv.resize(g.order);
    int k = static_cast<int>(perms[0].size());
    std::vector<int> c(k);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            // (a*b)(i) = a(b(i))
            for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            int ab = index.at(c);
            g.mul[a * g.order + b] = static_cast<uint16_t>(ab);
            if (ab == 0) g.inv[a] = static_cast<uint16_t>(b);
        }
    finish_classes(g);
    return g;
}

int parity(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv & 1;
}

}  // namespace

GroupTable symmetric_group(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return from_permutations(perms, "S" + std::to_string(k));
}

GroupTable alternating_group(int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("alternating_group: k out of supported range");
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do
        if (parity(p) == 0) perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return from_permutations(perms, "A" + std::to_string(k));
}

GroupTable group_from_table(const std::vector<std::vector<int>>& t, const std::string& name) {
    int n = static_cast<int>(t.size());
    if (n == 0 || n > 65535) throw std::invalid_argument("group table: bad order");
    for (auto& row : t) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table: rows must have N entries");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("group table: entry out of range");
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
        if (ok) e = a;
    }
    if (e < 0) throw std::invalid_argument("group table: no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) throw std::invalid_argument("group table: not associative");
    // relabel so that the identity is 0
    std::vector<int> to(n), from(n);
    std::iota(from.begin(), from.end(), 0);
    std::swap(from[0], from[e]);
    for (int i = 0; i < n; ++i) to[from[i]] = i;
    GroupTable g;
    g.name = name;
    g.order = n;
    g.mul.resize(n * n);
    g.inv.assign(n, 0);
    std::vector<int> has_inv(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = to[t[from[a]][from[b]]];
            g.mul[a * n + b] = static_cast<uint16_t>(ab);
            if (ab == 0) g.inv[a] = static_cast<uint16_t>(b), has_inv[a] = 1;
        }
    for (int a = 0; a < n; ++a)
        if (!has_inv[a]) throw std::invalid_argument("group table: element without inverse");
    finish_classes(g);
    return g;
}

GroupTable load_group_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open group file " + path);
    std::string word;
    int n = 0;
    if (!(f >> word >> n) || word != "order" || n <= 0) throw std::runtime_error("group file: expected 'order N'");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (auto& row : t)
        for (auto& x : row)
            if (!(f >> x)) throw std::runtime_error("group file: truncated table");
    return group_from_table(t, path);
}

GroupTable group_from_spec(const std::string& spec) {
    std::string s = spec;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "a4") return alternating_group(4);
    if (s == "a5") return alternating_group(5);
    if (s == "s3") return symmetric_group(3);
    if (s == "s4") return symmetric_group(4);
    if (spec.rfind("file:", 0) == 0) return load_group_file(spec.substr(5));
    throw std::invalid_argument("unknown group '" + spec + "'");
}

std::string group_to_text(const GroupTable& g) {
    std::ostringstream os;
    os << "order " << g.order << "\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) os << (b ? " " : "") << g.m(a, b);
        os << "\n";
    }
    return os.str();
}

uint64_t burnside_free_hom_classes(const GroupTable& g, int r) {
    if (r < 0) throw std::invalid_argument("rank must be non-negative");
    unsigned __int128 total = 0;
    for (int a = 0; a < g.order; ++a) {
        unsigned __int128 p = 1;
        for (int i = 0; i < r; ++i) p *= static_cast<unsigned>(g.centralizer_order[a]);
        total += p;
    }
    if (total % static_cast<unsigned>(g.order) != 0) throw std::logic_error("Burnside sum not divisible by |G|");
    unsigned __int128 q = total / static_cast<unsigned>(g.order);
    if (q > UINT64_MAX) throw std::overflow_error("class count exceeds 64 bits");
    return static_cast<uint64_t>(q);
}

uint64_t direct_free_hom_classes(const GroupTable& g, int r) {
    int n = g.order;
    uint64_t total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<uint64_t>(n);
    if (total > 50'000'000ULL) throw std::invalid_argument("direct orbit count too large");
    std::vector<int> tup(r), img(r);
    uint64_t orbits = 0;
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (int i = 0; i < r; ++i) tup[i] = static_cast<int>(c % n), c /= n;
        // count the tuple iff it is the smallest code in its conjugation orbit
        bool minimal = true;
        for (int h = 1; h < n && minimal; ++h) {
            uint64_t cc = 0;
            for (int i = r - 1; i >= 0; --i) cc = cc * n + static_cast<uint64_t>(g.m(g.m(h, tup[i]), g.inv[h]));
            if (cc < code) minimal = false;
        }
        orbits += minimal;
    }
    return orbits;
}

}  // namespace hlc
