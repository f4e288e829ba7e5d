#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "magebench/football/engine.hpp"
#include "magebench/football/scenario.hpp"

namespace mage::football {

// Scenario files are JSON: id, category, region, holder, seed, source,
// provenance, ball [x, y], players [{team, index, x, y}] in id order.
std::string format_scenario(const Scenario& s);
Scenario parse_scenario(const std::string& text);
void save_scenario(const std::filesystem::path& path, const Scenario& s);
Scenario load_scenario(const std::filesystem::path& path);

// One JSON object per frame: frame, action, agent (decided by the agent or
// auto-rendered), ball, holder, players [[x, y] ...], events, reward.
std::string format_replay_frame(const StepResult& frame, ActionId action, bool agent_decision,
                                double reward);

}  // namespace mage::football
