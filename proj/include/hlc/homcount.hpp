#pragma once

#include <cstdint>

#include "hlc/group.hpp"
#include "hlc/presentation.hpp"

namespace hlc {

// number of homomorphisms from the presented group to g
uint64_t count_homs(const Presentation& p, const GroupTable& g);
// conjugacy classes of homomorphisms from the presented group to g
uint64_t count_hom_classes(const Presentation& p, const GroupTable& g);
// same, restricted to homomorphisms sending `kill` to the identity
uint64_t count_constrained_classes(const Presentation& p, const GroupTable& g, const Word& kill);

// independent routes used as cross-checks
// (1/|G|) sum_h #{homomorphisms with image inside C(h)}
uint64_t count_hom_classes_burnside(const Presentation& p, const GroupTable& g);
// enumerate every homomorphism and count orbit minima directly
uint64_t count_hom_classes_direct(const Presentation& p, const GroupTable& g);

}  // namespace hlc
