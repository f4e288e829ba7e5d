#pragma once

#include <cstdint>
#include <string>

#include "magebench/harness/agent.hpp"
#include "magebench/harness/environment.hpp"
#include "magebench/harness/episode_result.hpp"
#include "magebench/harness/prompts.hpp"

namespace mage::harness {

struct PlannerConfig {
  Mode mode = Mode::Online;
  int action_memory = 5;
  int observation_memory = 1;
  int max_parse_retries = 2;
  int max_steps = 50;

  // Throws std::invalid_argument.
  void validate() const;
};

// AM=5, OM=1, two retries; 50 decisions for Sokoban, 400 for football.
PlannerConfig standard_config(EnvKind env, Mode mode);

struct EpisodeMeta {
  int repeat = 0;
  std::uint64_t seed = 0;
};

// One agent query (plus retries on a parse failure); the parsed sequence
// is applied until the level ends or max_steps actions have run.
EpisodeResult run_global(Agent& agent, Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                         const EpisodeMeta& meta = {});

// One decision per step. A step that still fails to parse after the retries
// leaves the environment untouched but uses up its slot.
EpisodeResult run_online(Agent& agent, Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                         const EpisodeMeta& meta = {});

EpisodeResult run_episode(Agent& agent, Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                          const EpisodeMeta& meta = {});

}  // namespace mage::harness
