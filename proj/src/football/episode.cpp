#include "magebench/football/episode.hpp"

#include <cmath>
#include <stdexcept>
#include <limits>

#include "magebench/football/reward.hpp"

namespace mage::football {

FootballEpisode::FootballEpisode(const Scenario& scenario, EpisodeOptions options, const BotPolicy& bots)
    : options_(options), bots_(&bots), state_(initial_state(scenario)) {}

void FootballEpisode::record(ActionId action, bool agent, StepResult r) {
  const double reward = reward_frame(r.state, r.events, options_.sim.rewards);
  total_reward_ += reward;
  state_ = r.state;
  trace_.push_back({action, agent, std::move(r), reward});
}

int FootballEpisode::act(ActionId action) {
  if (done()) throw std::logic_error("football episode already finished");
  ++decisions_;
  record(action, true, step(state_, action, *bots_, options_.sim));
  previous_ = last_;
  last_ = action;
  int frames = 1;
  if (options_.auto_render && !done()) {
    auto skip = auto_render(state_, previous_, last_, options_.render, *bots_, options_.sim);
    const ActionId repeated = skip.flight_skip ? ActionId::Idle : action;
    for (auto& f : skip.frames) record(repeated, false, std::move(f));
    auto_frames_ += skip.frames_skipped();
    frames += skip.frames_skipped();
  }
  return frames;
}

ActionId SelfPlayPolicy::decide(const FootballState& s) {
  if (!agent_in_control(s)) return ActionId::Idle;
  const PhysicsConfig phys;
  const Player& self = s.players[s.controlled];
  const Vec2 me = self.pos;

  if (me.x > 0.62 && std::abs(me.y) < 0.25) return ActionId::Shot;
  if (!self.sprint) return ActionId::Sprint;

  double threat = std::numeric_limits<double>::infinity();
  Vec2 threat_pos{};
  for (int j = kTeamSize; j < kPlayerCount; ++j) {
    const double d = distance(s.players[j].pos, me);
    if (d < threat) {
      threat = d;
      threat_pos = s.players[j].pos;
    }
  }

  const Vec2 heading = self.dir.norm() > 0.0 ? self.dir : Vec2{1.0, 0.0};
  if (collision_predicted(s, heading, AutoRenderConfig{}, phys)) {
    // release to a teammate ahead if one is unmarked, otherwise sidestep
    std::array<Vec2, kPlayerCount> positions{};
    for (int i = 0; i < kPlayerCount; ++i) positions[i] = s.players[i].pos;
    const auto lanes = open_lanes(positions, s.controlled);
    for (int m : lanes) {
      const Vec2 mate = s.players[m].pos;
      if (m != kOurKeeper && mate.x > me.x - 0.05 && distance(mate, me) < phys.short_pass_range) {
        const Vec2 to = (mate - me).normalized();
        if (self.dir.dot(to) > 0.7) return ActionId::ShortPass;
      }
    }
    if (std::abs(threat_pos.y - me.y) < 0.01 && self.dir.x > 0.0 && self.dir.y != 0.0)
      return self.dir.y > 0 ? ActionId::BottomRight : ActionId::TopRight;
    return threat_pos.y < me.y ? ActionId::BottomRight : ActionId::TopRight;
  }

  // defender in the running channel ahead: drift away from it, and keep
  // drifting until the channel is comfortably clear
  const bool drifting = std::abs(self.dir.y) > 0.0 && self.dir.x > 0.0;
  for (int j = kTeamSize; j < kPlayerCount; ++j) {
    const Vec2 o = s.players[j].pos;
    const double ahead = drifting ? 0.25 : 0.15;
    const double lateral = drifting ? 0.09 : 0.05;
    if (o.x > me.x && o.x - me.x < ahead && std::abs(o.y - me.y) < lateral) {
      if (me.y > phys.half_width - 0.08) return ActionId::TopRight;
      if (me.y < -phys.half_width + 0.08) return ActionId::BottomRight;
      if (drifting) return self.dir.y > 0 ? ActionId::BottomRight : ActionId::TopRight;
      return o.y < me.y ? ActionId::BottomRight : ActionId::TopRight;
    }
  }
  if (me.x > 0.5 && std::abs(me.y) > 0.2) return me.y > 0 ? ActionId::TopRight : ActionId::BottomRight;
  return ActionId::Right;
}

EpisodeSummary run_episode(const Scenario& scenario, FootballPolicy& policy, const EpisodeOptions& options,
                           const BotPolicy& bots) {
  FootballEpisode ep(scenario, options, bots);
  while (!ep.done()) ep.act(policy.decide(ep.state()));
  return {ep.total_reward(), ep.decisions(), ep.frames(), ep.termination()};
}

}  // namespace mage::football
