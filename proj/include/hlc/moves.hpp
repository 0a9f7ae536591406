#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hlc/diagram.hpp"

namespace hlc {

enum class MoveKind { R1, R2, R3, R4, R5, IH };
// Apply: the crossing-reducing (or neutral) direction. Inverse: crossing-increasing.
enum class Direction { Apply, Inverse };

struct MoveStep {
    MoveKind kind = MoveKind::R1;
    Direction dir = Direction::Apply;
    int a = -1;        // primary dart/vertex of the site
    int b = -1;        // second dart (R2 inverse)
    int variant = 0;   // crossing type / side choice
};

using MoveSet = unsigned;
inline constexpr MoveSet bit(MoveKind k) { return 1u << static_cast<unsigned>(k); }
inline constexpr MoveSet kRMoves = bit(MoveKind::R1) | bit(MoveKind::R2) | bit(MoveKind::R3) |
                                   bit(MoveKind::R4) | bit(MoveKind::R5);
inline constexpr MoveSet kRIHMoves = kRMoves | bit(MoveKind::IH);

int crossing_delta(const MoveStep& m);
std::string describe(const MoveStep& m);

// all applicable sites; crossing-increasing ones only when the result stays
// within max_crossings (negative: unlimited)
std::vector<MoveStep> enumerate_move_sites(const Diagram& d, MoveSet kinds, int max_crossings = -1);

// throws std::invalid_argument naming the failed precondition
Diagram apply_move(const Diagram& d, const MoveStep& step);

void for_each_neighbor(const Diagram& d, MoveSet kinds, int max_crossings,
                       const std::function<void(Diagram&&, const MoveStep&)>& f);

}  // namespace hlc
