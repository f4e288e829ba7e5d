#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magebench/harness/prompts.hpp"

namespace mage::harness {

enum class Role { User, Agent };

struct Turn {
  Role role = Role::User;
  std::string text;
  std::optional<int> observation;  // step whose frame accompanies this turn
};

struct StepRecord {
  std::string output;
  std::optional<std::string> action;  // empty when the output did not parse
};

struct Transcript {
  std::vector<Turn> turns;
  std::vector<std::string> actions;
  std::vector<std::string> raw_outputs;

  int agent_turns() const;
  int observation_count() const;
};

// Context for decision step t (1-based). history holds steps 1..t-1. The
// window keeps the last min(t-1, am) agent turns; the final min(t, om)
// user turns carry frames, older ones the unavailable placeholder.
Transcript online_window(const PromptSet& prompts, std::span<const StepRecord> history, int t, int am,
                         int om);

// Single user turn: system, task or initial frame, io.
Transcript global_prompt(const PromptSet& prompts);

}  // namespace mage::harness
