#pragma once

#include <optional>
#include <vector>

#include "magebench/football/auto_render.hpp"
#include "magebench/football/engine.hpp"
#include "magebench/football/scenario.hpp"

namespace mage::football {

struct EpisodeOptions {
  SimConfig sim;
  AutoRenderConfig render;
  bool auto_render = true;
};

struct FrameRecord {
  ActionId action = ActionId::Idle;
  bool agent = false;  // false for auto-rendered frames
  StepResult result;
  double reward = 0.0;
};

// Frame loop around step/auto_render/reward_frame. Each act() is one agent
// decision: the chosen action runs for one frame, then auto-rendering may
// simulate further frames on its own.
class FootballEpisode {
 public:
  explicit FootballEpisode(const Scenario& scenario, EpisodeOptions options = {},
                           const BotPolicy& bots = default_bots());

  const FootballState& state() const { return state_; }
  bool done() const { return state_.terminated(); }
  int act(ActionId action);

  int decisions() const { return decisions_; }
  int frames() const { return state_.frame; }
  int auto_frames() const { return auto_frames_; }
  double total_reward() const { return total_reward_; }
  Termination termination() const { return state_.termination; }
  const std::vector<FrameRecord>& trace() const { return trace_; }
  const EpisodeOptions& options() const { return options_; }

 private:
  void record(ActionId action, bool agent, StepResult r);

  EpisodeOptions options_;
  const BotPolicy* bots_;
  FootballState state_;
  std::optional<ActionId> previous_, last_;
  std::vector<FrameRecord> trace_;
  int decisions_ = 0;
  int auto_frames_ = 0;
  double total_reward_ = 0.0;
};

class FootballPolicy {
 public:
  virtual ~FootballPolicy() = default;
  virtual ActionId decide(const FootballState& state) = 0;
};

// Scripted attacker used for self-play: runs at goal, sidesteps defenders in
// its path, passes when pressed with a lane open, shoots inside the box.
class SelfPlayPolicy final : public FootballPolicy {
 public:
  ActionId decide(const FootballState& state) override;
};

struct EpisodeSummary {
  double reward = 0.0;
  int decisions = 0;
  int frames = 0;
  Termination termination = Termination::None;
};

EpisodeSummary run_episode(const Scenario& scenario, FootballPolicy& policy, const EpisodeOptions& options = {},
                           const BotPolicy& bots = default_bots());

}  // namespace mage::football
