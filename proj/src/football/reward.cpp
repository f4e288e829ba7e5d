#include "magebench/football/reward.hpp"

#include <algorithm>
#include <limits>

namespace mage::football {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = ab.dot(ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

int passed_count(const FootballState& s) {
  int n = 0;
  for (int i = kTeamSize; i < kPlayerCount; ++i) {
    if (s.players[i].pos.x < s.ball.pos.x) ++n;
  }
  return n;
}

std::array<Vec2, kTeamSize> opponent_positions(const FootballState& state) {
  std::array<Vec2, kTeamSize> out{};
  for (int i = 0; i < kTeamSize; ++i) out[i] = state.players[kTeamSize + i].pos;
  return out;
}

double s_move(const FootballState& state) {
  if (!state.own_ball()) return 0.0;
  return state.ball.pos.x - state.anchor.ball_x;
}

double s_oppo(const FootballState& state) {
  if (!state.own_ball()) return 0.0;
  return static_cast<double>(passed_count(state) - state.anchor.passed) / kTeamSize;
}

double s_pass(Vec2 receiver, std::span<const Vec2> opponents, Vec2 goal, double beta,
              double epsilon) {
  const Vec2 to_goal = (goal - receiver).normalized();
  double best = std::numeric_limits<double>::infinity();
  for (Vec2 o : opponents) {
    const Vec2 to_opp = o - receiver;
    const double len = to_opp.norm();
    const double cos_theta = len > 0.0 ? to_opp.dot(to_goal) / len : 1.0;
    best = std::min(best, len / (beta * std::max(cos_theta, 0.0) + epsilon));
  }
  return best;
}

std::array<Vec2, 5> shot_targets(const PhysicsConfig& physics) {
  std::array<Vec2, 5> pts{};
  for (int i = 0; i < 5; ++i) {
    pts[i] = {physics.half_length, -physics.goal_half_width + i * physics.goal_half_width / 2.0};
  }
  return pts;
}

ShotChoice best_shot(Vec2 shooter, std::span<const Vec2> opponents, const PhysicsConfig& physics) {
  const auto targets = shot_targets(physics);
  ShotChoice best{2, -1.0};
  // Centre first so ties prefer the middle of the goal.
  constexpr int order[5] = {2, 1, 3, 0, 4};
  for (int idx : order) {
    double clearance = std::numeric_limits<double>::infinity();
    for (Vec2 o : opponents) {
      clearance = std::min(clearance, point_segment_distance(o, shooter, targets[idx]));
    }
    clearance = std::min(clearance, physics.goal_half_width);
    if (clearance > best.clearance) best = {idx, clearance};
  }
  return best;
}

double s_shot(Vec2 shooter, std::span<const Vec2> opponents, const PhysicsConfig& physics) {
  return best_shot(shooter, opponents, physics).clearance;
}

double interception_reward(int frame, const RewardWeights& w) {
  return w.interception * static_cast<double>(frame) / static_cast<double>(w.horizon);
}

double reward_frame(const FootballState& state, const FrameEvents& events, const RewardWeights& w) {
  double r = w.move * s_move(state) + w.opponents * s_oppo(state);
  if (events.scored) r += w.scored;
  if (events.stole || events.horizon) r += interception_reward(state.frame, w);
  if (events.pass_received) r += w.pass * events.s_pass;
  if (events.shot_taken) r += w.shot * events.s_shot;
  return r;
}

}  // namespace mage::football
