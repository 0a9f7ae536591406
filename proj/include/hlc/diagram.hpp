#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hlc/plane_graph.hpp"

namespace hlc {

// Crossing convention: at a degree-4 vertex the slots 0 and 2 carry the
// understrand, 1 and 3 the overstrand. A crossing-free circle is a free loop.
struct Diagram {
    PlaneGraph g;
    int free_loops = 0;

    int crossing_count() const { return g.count(4); }
    int trivalent_count() const { return g.count(3); }
    bool operator==(const Diagram& o) const { return g == o.g && free_loops == o.free_loops; }
};

inline int opposite(int s) { return slot(vert_of(s), (pos_of(s) + 2) & 3); }
inline bool is_under(int s) { return (pos_of(s) & 1) == 0; }

// bit i of `over_mask` (over the quadrivalent vertices in index order) flips that crossing
Diagram resolve(const PlaneGraph& skeleton, unsigned over_mask);
std::vector<Diagram> assign_crossings(const PlaneGraph& skeleton);

Diagram flip_crossing(const Diagram& d, int v);
Diagram mirror(const Diagram& d);
Diagram reflect(const Diagram& d);  // reversed rotations, crossings kept

struct Components {
    int count = 0;
    std::vector<int> of_slot;          // component id per slot (-1 unused)
    std::vector<int> trivalent;        // number of trivalent vertices per component
    std::vector<bool> free_loop;       // component is a crossing-free circle
};
Components trace_components(const Diagram& d);
int component_count(const Diagram& d);

// Strand orientation per slot: +1 when the oriented strand leaves the vertex
// through the slot, -1 when it arrives. Edges between trivalent vertices run
// away from the lower slot id; circles start at their lowest slot id.
std::vector<int8_t> orientation(const Diagram& d);
// sign of a crossing under the given orientation (standard right-hand rule)
int crossing_sign(const Diagram& d, const std::vector<int8_t>& orient, int v);

int diagram_connectivity(const Diagram& d);
// true when the underlying graph is disconnected, has a bridge, or a free loop
// coexists with other material: the split/reducible forms
bool is_decomposed(const Diagram& d);

// canonical code of the diagram, optionally identifying it with its mirror image
CanonicalCode diagram_code(const Diagram& d, bool up_to_mirror);

// PD-like text: X(a,b,c,d) with a the entering understrand, V(a,b,c), O() free loop
std::string to_code(const Diagram& d);
Diagram diagram_from_code(const std::string& text);

struct NamedDiagram {
    std::string name;
    Diagram d;
};
// Versioned file: header line "# hlc-diagrams v1", then "name: code" or "code" lines
std::vector<NamedDiagram> read_diagrams(std::istream& in);
std::vector<NamedDiagram> read_diagram_file(const std::string& path);
void write_diagrams(std::ostream& out, const std::vector<NamedDiagram>& ds);

}  // namespace hlc
