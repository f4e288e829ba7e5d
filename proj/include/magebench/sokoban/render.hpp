#pragma once

#include "magebench/common/raster.hpp"
#include "magebench/sokoban/sokoban.hpp"

namespace mage::sokoban {

inline constexpr int kTileSize = 16;

// Red-brick walls, green player, yellow boxes, targets marked with a red dot.
// The output depends only on the grid, box set and player cell.
Raster render(const State& state);
Raster render(const Level& level, std::span<const Coord> boxes, Coord player);

}  // namespace mage::sokoban
