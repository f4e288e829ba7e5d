#include "magebench/football/auto_render.hpp"

namespace mage::football {

bool collision_predicted(const FootballState& state, Vec2 dir, const AutoRenderConfig& cfg,
                         const PhysicsConfig& physics) {
  if (!state.ball.holder) return false;
  const Player& holder = state.players[*state.ball.holder];
  const Vec2 holder_vel = dir * player_speed(holder, physics);
  for (int i = 0; i <= cfg.lookahead; ++i) {
    const Vec2 h = holder.pos + holder_vel * i;
    for (int j = kTeamSize; j < kPlayerCount; ++j) {
      const Player& o = state.players[j];
      if (distance(o.pos + o.vel * i, h) < cfg.proximity) return true;
    }
  }
  return false;
}

AutoRenderResult auto_render(const FootballState& state,
                             std::optional<ActionId> previous, std::optional<ActionId> last,
                             const AutoRenderConfig& cfg, const BotPolicy& bots,
                             const SimConfig& sim) {
  AutoRenderResult out;
  FootballState cur = state;
  if (cur.terminated()) return out;

  if (cur.ball.in_flight()) {
    out.flight_skip = true;
    while (!cur.terminated() && cur.ball.in_flight()) {
      out.frames.push_back(step(cur, ActionId::Idle, bots, sim));
      cur = out.frames.back().state;
    }
    return out;
  }

  if (!previous || !last || *previous != *last || !is_direction(*last)) return out;
  const Vec2 dir = direction_vector(*last);
  for (int k = 0; k < cfg.max_skip_frames; ++k) {
    if (!agent_in_control(cur)) break;
    if (collision_predicted(cur, dir, cfg, sim.physics)) {
      out.guard_fired = true;
      break;
    }
    out.frames.push_back(step(cur, *last, bots, sim));
    cur = out.frames.back().state;
    if (cur.terminated()) break;
  }
  return out;
}

}  // namespace mage::football
