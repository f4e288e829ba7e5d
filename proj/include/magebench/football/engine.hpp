#pragma once

#include <array>

#include "magebench/football/types.hpp"

namespace mage::football {

struct SimConfig {
  PhysicsConfig physics;
  RewardWeights rewards;
};

// Movement policy for every player the agent is not steering this frame.
class BotPolicy {
 public:
  virtual ~BotPolicy() = default;
  virtual std::array<Vec2, kPlayerCount> velocities(const FootballState& state,
                                                    const PhysicsConfig& physics) const = 0;
};

// Opponents: the two nearest outfield players press the ball, the rest hold a
// block between ball and goal, the keeper tracks the ball along the line.
// Teammates drift with the ball around their formation anchors; the pass
// receiver runs onto the ball. Deterministic given state.seed.
class HeuristicBots final : public BotPolicy {
 public:
  std::array<Vec2, kPlayerCount> velocities(const FootballState& state,
                                            const PhysicsConfig& physics) const override;
};

const BotPolicy& default_bots();

struct StepResult {
  FootballState state;
  FrameEvents events;
};

// Integrates one frame. The agent's action only has an effect while our
// team holds the ball; during a flight the receiver is driven by the bots.
// Throws std::logic_error if the state is already terminated.
StepResult step(const FootballState& state, ActionId action, const BotPolicy& bots,
                const SimConfig& config);

// True when the agent is steering the ball holder this frame.
bool agent_in_control(const FootballState& state);

// Teammate a pass of `kind` would target given the holder's movement intent.
int pick_receiver(const FootballState& state, Flight kind, const PhysicsConfig& physics);

double player_speed(const Player& p, const PhysicsConfig& physics);

}  // namespace mage::football
