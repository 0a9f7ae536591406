#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlc/diagram.hpp"
#include "hlc/group.hpp"
#include "hlc/homcount.hpp"

namespace hlc {

struct KsValue {
    std::string group;
    uint64_t count = 0;
};
KsValue ks(const Diagram& d, const GroupTable& g);

// Divisibility conditions that a reducible link with a given factor must meet.
struct Condition {
    std::string name;   // "unknot-A4", "unknot-A5", "knot2(p=1)", "link2(p=0)", ...
    bool tested = false;
    bool divisible = false;
};

enum class Conclusion { Irreducible, Inconclusive };

struct IrreducibilityVerdict {
    std::vector<Condition> conditions;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string reason;
};

// the factor-type rules are applied for every rank between n+1 and rank_bound
IrreducibilityVerdict irreducibility_test(uint64_t ks_a4, std::optional<uint64_t> ks_a5, int n, int rank_bound);

struct LinkingMatrix {
    std::vector<std::vector<long>> entries;  // cycles of A x cycles of B
    std::vector<long> divisors;              // nonzero elementary divisors
};
LinkingMatrix linking_matrix(const Diagram& d, int comp_a, int comp_b);
std::vector<long> elementary_divisors(std::vector<std::vector<long>> m);

enum class Chirality { Chiral, Inconclusive };
struct ChiralityResult {
    uint64_t n = 0, rn = 0;  // classes killing m.l and m.l^-1
    Chirality verdict = Chirality::Inconclusive;
};
ChiralityResult chirality_test(const Diagram& d, int comp, const GroupTable& g);

// erase a circle component; strands it crossed become plain edges
Diagram delete_component(const Diagram& d, int comp);
// erase any set of components, trivalent ones included
Diagram delete_components(const Diagram& d, const std::vector<int>& comps);

// a reason the link cannot be split, if one is found: nonzero linking across
// every bipartition, or a hom count that differs from every free-product count
std::optional<std::string> nonsplit_certificate(const Diagram& d, const GroupTable& g);
// ks of each single circle deletion, sorted
std::vector<uint64_t> deletion_ks(const Diagram& d, const GroupTable& g);

}  // namespace hlc
