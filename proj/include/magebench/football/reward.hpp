#pragma once

#include <array>
#include <span>

#include "magebench/football/types.hpp"

namespace mage::football {

// delta_own-ball * (ball_x(t) - ball_x(t')).
double s_move(const FootballState& state);

// delta_own-ball * (Passed(t) - Passed(t')) / 11.
double s_oppo(const FootballState& state);

// min_i L_i / (beta * max(cos theta_i, 0) + epsilon), theta_i between
// receiver->opponent and receiver->goal. Returns +inf without opponents.
double s_pass(Vec2 receiver, std::span<const Vec2> opponents, Vec2 goal, double beta = 10.0,
              double epsilon = 1.0);

// Five aim points spread evenly across the goal mouth.
std::array<Vec2, 5> shot_targets(const PhysicsConfig& physics);

struct ShotChoice {
  int target_index = 0;
  double clearance = 0.0;  // capped at the goal half width
};

// Picks the aim point whose shooter->point segment keeps the largest minimum
// opponent distance; that distance, capped, is the shot quality.
ShotChoice best_shot(Vec2 shooter, std::span<const Vec2> opponents, const PhysicsConfig& physics);
double s_shot(Vec2 shooter, std::span<const Vec2> opponents, const PhysicsConfig& physics);

// lambda-weighted sum for one frame; `state` is the state at the end of the frame.
double reward_frame(const FootballState& state, const FrameEvents& events, const RewardWeights& w);

// The interception term alone: lambda_4 * t / T.
double interception_reward(int frame, const RewardWeights& w);

std::array<Vec2, kTeamSize> opponent_positions(const FootballState& state);

}  // namespace mage::football
