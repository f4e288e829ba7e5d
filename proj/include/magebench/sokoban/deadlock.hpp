#pragma once

#include <span>
#include <vector>

#include "magebench/sokoban/sokoban.hpp"

namespace mage::sokoban {

// Cells where a box that is not on a target can never be moved onto one:
// wall corners, and runs along a solid wall that are closed at both ends and
// contain no target. Indexed by Grid::index.
std::vector<bool> dead_squares(const Grid& grid);

// True when some off-target box sits on a dead square, or a 2x2 block of
// walls/boxes holds at least one off-target box (freeze). Sound but not
// complete: a false result says nothing about solvability.
bool is_deadlock(const Level& level, std::span<const Coord> boxes);
bool is_deadlock(const State& state);

// The freeze test restricted to the four 2x2 squares that contain `box`.
bool frozen_square_at(const Grid& grid, std::span<const Coord> boxes, Coord box);

}  // namespace mage::sokoban
