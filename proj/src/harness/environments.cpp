#include "magebench/harness/environment.hpp"

#include <stdexcept>

#include "magebench/football/render.hpp"
#include "magebench/sokoban/render.hpp"

namespace mage::harness {

const std::vector<std::string>& sokoban_vocabulary() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (auto a : sokoban::kActions) out.emplace_back(sokoban::action_name(a));
    return out;
  }();
  return v;
}

const std::vector<std::string>& football_vocabulary() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (int i = 0; i < football::kActionCount; ++i) {
      out.emplace_back(football::action_name(static_cast<football::ActionId>(i)));
    }
    return out;
  }();
  return v;
}

SokobanEnv::SokobanEnv(std::shared_ptr<const sokoban::Level> level) : state_(sokoban::initial_state(std::move(level))) {}

const std::vector<std::string>& SokobanEnv::vocabulary() const { return sokoban_vocabulary(); }

Raster SokobanEnv::observe() const { return sokoban::render(state_); }

double SokobanEnv::apply(const std::string& action) {
  const auto a = sokoban::action_from_name(action);
  if (!a) throw std::invalid_argument("not a sokoban action: " + action);
  auto [next, events] = sokoban::step(state_, *a);
  state_ = std::move(next);
  rewards_.push_back(sokoban::reward_step(events));
  return rewards_.back();
}

double SokobanEnv::score() const { return sokoban::score_episode(rewards_, state_.level->r_best); }

std::string SokobanEnv::termination() const {
  if (state_.done) return "solved";
  return "unsolved";
}

nlohmann::ordered_json SokobanEnv::extras() const {
  nlohmann::ordered_json j;
  j["r_best"] = state_.level->r_best;
  j["optimal_steps"] = state_.level->optimal_steps;
  j["tier"] = state_.level->difficulty;
  j["steps_taken"] = state_.steps_taken;
  return j;
}

FootballEnv::FootballEnv(football::Scenario scenario, football::EpisodeOptions options)
    : scenario_(std::move(scenario)), episode_(scenario_, options) {}

const std::vector<std::string>& FootballEnv::vocabulary() const { return football_vocabulary(); }

Raster FootballEnv::observe() const { return football::render(episode_.state(), episode_.options().sim.physics); }

double FootballEnv::apply(const std::string& action) {
  const auto a = football::action_from_name(action);
  if (!a) throw std::invalid_argument("not a football action: " + action);
  const double before = episode_.total_reward();
  episode_.act(*a);
  rewards_.push_back(episode_.total_reward() - before);
  return rewards_.back();
}

std::string FootballEnv::termination() const {
  return std::string(football::termination_name(episode_.termination()));
}

nlohmann::ordered_json FootballEnv::extras() const {
  nlohmann::ordered_json j;
  j["category"] = football::category_name(scenario_.category);
  j["region"] = scenario_.region;
  j["frames"] = episode_.frames();
  j["auto_frames"] = episode_.auto_frames();
  j["auto_render"] = episode_.options().auto_render;
  return j;
}

}  // namespace mage::harness
