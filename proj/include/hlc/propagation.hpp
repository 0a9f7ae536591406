#pragma once

#include <vector>

#include "hlc/presentation.hpp"

namespace hlc {

// A relator in which generator `gen` occurs exactly once, all other letters already known.
struct Derivation {
    int gen;
    int relator;
};

struct SeedPlan {
    bool complete = false;
    std::vector<int> seeds;               // generators to branch on, in order
    std::vector<Derivation> derivations;  // in evaluation order
    // levels[i]: derivations that become available once seeds[0..i] are known
    std::vector<std::vector<Derivation>> levels;
    // checks[i]: relators fully determined after seeds[0..i] (excluding derivations)
    std::vector<std::vector<int>> checks;
};

// propagate from the given seeds in order; complete iff every generator is reached
SeedPlan propagate(int gens, const std::vector<Word>& rels, const std::vector<int>& seeds);

// smallest seed set found within the effort budget; falls back to greedy growth
SeedPlan minimum_seed_plan(int gens, const std::vector<Word>& rels, int effort = 2000);

}  // namespace hlc
