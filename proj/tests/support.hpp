#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hlc/group.hpp"
#include "hlc/presentation.hpp"

#ifndef HLC_FIXTURE_DIR
#define HLC_FIXTURE_DIR "fixtures"
#endif

namespace oracle {

inline std::string fixture(const std::string& name) { return std::string(HLC_FIXTURE_DIR) + "/" + name; }

inline int eval(const hlc::GroupTable& g, const hlc::Word& w, const std::vector<int>& img) {
    int x = 0;
    for (int l : w) x = g.m(x, l > 0 ? img[l - 1] : g.inv[img[-l - 1]]);
    return x;
}

// every tuple of images, orbit minima under simultaneous conjugation; tiny presentations only
inline uint64_t hom_classes(const hlc::Presentation& p, const hlc::GroupTable& g) {
    std::set<std::vector<int>> orbits;
    std::vector<int> img(p.gens, 0);
    while (true) {
        bool ok = true;
        for (auto& r : p.rels) ok = ok && eval(g, r, img) == 0;
        if (ok) {
            std::vector<int> best = img;
            for (int h = 0; h < g.order; ++h) {
                std::vector<int> c(p.gens);
                for (int i = 0; i < p.gens; ++i) c[i] = g.m(g.m(h, img[i]), g.inv[h]);
                best = std::min(best, c);
            }
            orbits.insert(best);
        }
        int k = 0;
        while (k < p.gens && ++img[k] == g.order) img[k++] = 0;
        if (k == p.gens) break;
    }
    return orbits.size();
}

}  // namespace oracle
