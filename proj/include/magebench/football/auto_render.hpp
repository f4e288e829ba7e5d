#pragma once

#include <optional>
#include <vector>

#include "magebench/football/engine.hpp"

namespace mage::football {

struct AutoRenderConfig {
  int max_skip_frames = 10;
  int lookahead = 5;
  double proximity = 0.024;  // delta; twice the base possession radius
};

struct AutoRenderResult {
  std::vector<StepResult> frames;  // every frame simulated without the agent
  int frames_skipped() const { return static_cast<int>(frames.size()); }
  bool flight_skip = false;
  bool guard_fired = false;
};

// Constant-velocity check over i = 0..lookahead: true when some opponent is
// predicted closer than `proximity` to the holder running along `dir`.
bool collision_predicted(const FootballState& state, Vec2 dir, const AutoRenderConfig& cfg,
                         const PhysicsConfig& physics);

// Frame-skip after an agent decision. A ball in the air is simulated until it
// is received or lost. Otherwise, when the last two actions are the same
// direction, that direction is repeated for up to max_skip_frames frames,
// stopping as soon as the lookahead guard predicts an opponent within delta.
AutoRenderResult auto_render(const FootballState& state,
                             std::optional<ActionId> previous, std::optional<ActionId> last,
                             const AutoRenderConfig& cfg, const BotPolicy& bots,
                             const SimConfig& sim);

}  // namespace mage::football
