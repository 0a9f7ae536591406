#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hlc {

// Dense multiplication table of a finite group; element 0 is the identity.
struct GroupTable {
    std::string name;
    int order = 0;
    std::vector<uint16_t> mul;  // order*order
    std::vector<uint16_t> inv;
    std::vector<int> cls;       // conjugacy class id per element
    std::vector<int> class_size;
    std::vector<int> reps;      // one representative per class (smallest index)
    std::vector<int> centralizer_order;
    std::vector<uint64_t> centralizer_mask;  // filled when order <= 64

    int m(int a, int b) const { return mul[a * order + b]; }
    int class_count() const { return static_cast<int>(reps.size()); }
    bool has_masks() const { return !centralizer_mask.empty(); }
};

GroupTable alternating_group(int k);
GroupTable symmetric_group(int k);
// validates the group axioms; the identity is moved to index 0
GroupTable group_from_table(const std::vector<std::vector<int>>& table, const std::string& name = "file");
// "a4", "a5", "s4", or "file:PATH" ("order N" line followed by N rows)
GroupTable group_from_spec(const std::string& spec);
GroupTable load_group_file(const std::string& path);
std::string group_to_text(const GroupTable& g);

// (1/|G|) sum_g |C(g)|^r: conjugacy classes of homomorphisms from a free group of rank r
uint64_t burnside_free_hom_classes(const GroupTable& g, int r);
// orbit count over all |G|^r tuples under simultaneous conjugation (oracle)
uint64_t direct_free_hom_classes(const GroupTable& g, int r);

}  // namespace hlc
