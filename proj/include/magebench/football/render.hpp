#pragma once

#include "magebench/common/raster.hpp"
#include "magebench/football/types.hpp"

namespace mage::football {

inline constexpr int kPitchWidth = 320;
inline constexpr int kPitchHeight = 144;

// Top-down pitch: green grass, white lines, our team yellow, opponents blue,
// controlled player ringed in red, ball white.
Raster render(const FootballState& state, const PhysicsConfig& physics = {});

}  // namespace mage::football
