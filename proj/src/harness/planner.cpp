#include "magebench/harness/planner.hpp"

#include <stdexcept>

#include "magebench/harness/parse.hpp"

namespace mage::harness {

void PlannerConfig::validate() const {
  if (action_memory < 1) throw std::invalid_argument("action memory must be at least 1");
  if (observation_memory < 1) throw std::invalid_argument("observation memory must be at least 1");
  if (observation_memory > action_memory) throw std::invalid_argument("observation memory exceeds action memory");
  if (max_parse_retries < 0) throw std::invalid_argument("negative retry budget");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
}

PlannerConfig standard_config(EnvKind env, Mode mode) {
  PlannerConfig cfg;
  cfg.mode = mode;
  cfg.max_steps = env == EnvKind::Football ? 400 : 50;
  return cfg;
}

namespace {

EpisodeInfo info_for(const Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                     const EpisodeMeta& meta) {
  return {env.kind(), cfg.mode, prompts, env.id(), meta.seed, cfg.max_steps, env.vocabulary()};
}

EpisodeResult base_result(const Environment& env, const PlannerConfig& cfg, const EpisodeMeta& meta) {
  EpisodeResult r;
  r.env = env_name(env.kind());
  r.mode = mode_name(cfg.mode);
  r.level_id = env.id();
  r.repeat = meta.repeat;
  r.seed = meta.seed;
  return r;
}

// Queries until the reply parses or the budget is spent.
Decision decide(Agent& agent, Observation obs, const std::vector<std::string>& vocab, ParseMode mode,
                int max_retries, int& calls) {
  Decision d;
  d.step = obs.step;
  for (int attempt = 1; attempt <= 1 + max_retries; ++attempt) {
    obs.attempt = attempt;
    d.attempts = attempt;
    d.output = agent.act(obs);
    ++calls;
    try {
      d.actions = parse_actions(d.output, vocab, mode);
      d.parsed = true;
      break;
    } catch (const ParseError&) {
    }
  }
  return d;
}

void finish(Agent& agent, Environment& env, EpisodeResult& r) {
  r.score = env.score();
  r.rewards = env.rewards();
  r.termination = env.termination();
  r.errors = classify_errors(r.outputs());
  r.extras = env.extras();
  agent.finish(r.score);
}

}  // namespace

EpisodeResult run_global(Agent& agent, Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                         const EpisodeMeta& meta) {
  cfg.validate();
  if (env.kind() == EnvKind::Football) throw std::invalid_argument("football supports the online mode only");
  EpisodeResult r = base_result(env, cfg, meta);
  r.mode = mode_name(Mode::Global);
  auto info = info_for(env, prompts, cfg, meta);
  info.mode = Mode::Global;
  agent.start(info);

  Observation obs;
  obs.step = 1;
  obs.context = global_prompt(prompts);
  if (obs.context.turns.front().observation) obs.frames.emplace(1, env.observe());
  Decision d = decide(agent, std::move(obs), env.vocabulary(), ParseMode::Sequence, cfg.max_parse_retries,
                      r.agent_calls);
  int applied = 0;
  for (const auto& a : d.actions) {
    if (env.done() || applied == cfg.max_steps) break;
    env.apply(a);
    ++applied;
  }
  r.decisions.push_back(std::move(d));
  finish(agent, env, r);
  return r;
}

EpisodeResult run_online(Agent& agent, Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                         const EpisodeMeta& meta) {
  cfg.validate();
  EpisodeResult r = base_result(env, cfg, meta);
  r.mode = mode_name(Mode::Online);
  auto info = info_for(env, prompts, cfg, meta);
  info.mode = Mode::Online;
  agent.start(info);

  std::vector<StepRecord> history;
  std::map<int, Raster> frames;
  for (int t = 1; t <= cfg.max_steps && !env.done(); ++t) {
    frames.emplace(t, env.observe());
    frames.erase(frames.begin(), frames.lower_bound(t - cfg.observation_memory + 1));
    Observation obs;
    obs.step = t;
    obs.context = online_window(prompts, history, t, cfg.action_memory, cfg.observation_memory);
    obs.frames = frames;
    Decision d = decide(agent, std::move(obs), env.vocabulary(), ParseMode::Single, cfg.max_parse_retries,
                        r.agent_calls);
    StepRecord rec{d.output, std::nullopt};
    if (d.parsed) {
      rec.action = d.actions.front();
      env.apply(d.actions.front());
    }
    history.push_back(std::move(rec));
    r.decisions.push_back(std::move(d));
  }
  if (r.decisions.empty()) r.decisions.push_back({});  // already terminal at reset
  finish(agent, env, r);
  return r;
}

EpisodeResult run_episode(Agent& agent, Environment& env, const PromptSet& prompts, const PlannerConfig& cfg,
                          const EpisodeMeta& meta) {
  return cfg.mode == Mode::Global ? run_global(agent, env, prompts, cfg, meta)
                                  : run_online(agent, env, prompts, cfg, meta);
}

}  // namespace mage::harness
