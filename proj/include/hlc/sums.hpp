#pragma once

#include <string>
#include <vector>

#include "hlc/diagram.hpp"

namespace hlc {

// An edge site is a slot s; the edge is {s, link s}. `flip` selects which
// cut end of the second edge meets s.
struct EdgeSite {
    int slot = -1;
};

// splice d2, cut open at s2, into d1's edge s1
Diagram order2_sum(const Diagram& d1, EdgeSite s1, const Diagram& d2, EdgeSite s2, bool flip);
// join component c1 of d1 to component c2 of d2 by a new edge with two trivalent ends
Diagram order1_sum(const Diagram& d1, int c1, const Diagram& d2, int c2);

// one slot per edge (the smaller slot of each pair)
std::vector<EdgeSite> edge_sites(const Diagram& d);

// closure of a braid on `strands` strands; letter +i is sigma_i, -i its inverse
Diagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace hlc
