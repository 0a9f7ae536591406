#pragma once

#include <cstddef>
#include <vector>

#include "hlc/moves.hpp"

namespace hlc {

struct Budget {
    int max_crossings = -1;          // negative: crossings of the seed + 2
    std::size_t max_states = 5'000'000;
};

enum class Verdict { ReducedTo, Survivor, Inconclusive };
const char* verdict_name(Verdict v);

struct ReduceResult {
    Verdict verdict = Verdict::Inconclusive;
    Diagram reached;                 // the smaller or decomposed diagram for ReducedTo
    std::vector<MoveStep> path;      // moves from the seed to `reached`
    int class_id = -1;               // survivor class (batch: shared between seeds)
    std::size_t states = 0;
};

// best-first closure: fewer crossings are explored first, ties in insertion order
ReduceResult reduce_search(const Diagram& d, Budget budget, MoveSet moves);

// seeds share one visited table; searches that meet are merged, so survivors
// of the same equivalence class receive the same class id
std::vector<ReduceResult> reduce_batch(const std::vector<Diagram>& seeds, Budget budget, MoveSet moves);

struct MeetResult {
    int target = -1;                 // index of the target met, -1 if none
    std::vector<MoveStep> path;      // moves from d to a diagram in that target's closure
    std::size_t states = 0;
};

// explores the targets' closures first (half the state budget), then searches
// from d until one of them is met; the crossing cap covers d and all targets
// With up_to_mirror false, a diagram and its mirror image are different
// states, so meeting mirror(d) from d witnesses amphicheirality.
MeetResult meet_search(const Diagram& d, const std::vector<Diagram>& targets, Budget budget, MoveSet moves,
                       bool up_to_mirror = true);
// same, with the target closure built once for all seeds
std::vector<MeetResult> meet_batch(const std::vector<Diagram>& seeds, const std::vector<Diagram>& targets, Budget budget,
                                   MoveSet moves, bool up_to_mirror = true);

}  // namespace hlc
