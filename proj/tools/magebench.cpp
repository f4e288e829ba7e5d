#include <CLI11.hpp>

#include <iostream>

#include "magebench/cli/commands.hpp"
#include "magebench/harness/agent.hpp"

using namespace mage::cli;

namespace {

void add_run_flags(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config; flags given on the command line win");
  cmd->add_option("--env", cfg.env, "sokoban | football | webui");
  cmd->add_option("--mode", cfg.mode, "global | online");
  cmd->add_option("--corpus", cfg.corpus, "corpus directory written by generate");
  cmd->add_option("--out", cfg.out, "run directory");
  cmd->add_option("--repeats", cfg.repeats);
  cmd->add_option("--seed", cfg.seed);
  cmd->add_option("--levels", cfg.levels, "only these level ids")->delimiter(',');
  cmd->add_option("--limit", cfg.limit, "first k levels");
  cmd->add_option("--am", cfg.action_memory, "action memory");
  cmd->add_option("--om", cfg.observation_memory, "observation memory");
  cmd->add_option("--retries", cfg.max_parse_retries);
  cmd->add_option("--max-steps", cfg.max_steps);
  cmd->add_flag("--auto-render,!--no-auto-render", cfg.auto_render, "football frame skipping");
  cmd->add_option("--bind", cfg.bind, "host:port for the interactive endpoint (default $MAGEBENCH_BIND)");
  cmd->add_option("--timeout-ms", cfg.interactive_timeout_ms, "give up on a human after this long");
}

// Re-applies flags the user actually passed on top of a loaded config file.
RunConfig merge(CLI::App* cmd, const RunConfig& flags, const std::string& config_path) {
  if (config_path.empty()) return flags;
  RunConfig cfg = load_config(config_path);
  const auto given = [cmd](const char* name) { return cmd->count(name) > 0; };
  if (given("--env")) cfg.env = flags.env;
  if (given("--mode")) cfg.mode = flags.mode;
  if (given("--agent")) cfg.agent = flags.agent;
  if (given("--corpus")) cfg.corpus = flags.corpus;
  if (given("--out")) cfg.out = flags.out;
  if (given("--repeats")) cfg.repeats = flags.repeats;
  if (given("--seed")) cfg.seed = flags.seed;
  if (given("--workers")) cfg.workers = flags.workers;
  if (given("--levels")) cfg.levels = flags.levels;
  if (given("--limit")) cfg.limit = flags.limit;
  if (given("--am")) cfg.action_memory = flags.action_memory;
  if (given("--om")) cfg.observation_memory = flags.observation_memory;
  if (given("--retries")) cfg.max_parse_retries = flags.max_parse_retries;
  if (given("--max-steps")) cfg.max_steps = flags.max_steps;
  if (given("--auto-render") || given("--no-auto-render")) cfg.auto_render = flags.auto_render;
  if (given("--bind")) cfg.bind = flags.bind;
  if (given("--timeout-ms")) cfg.interactive_timeout_ms = flags.interactive_timeout_ms;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magebench: Sokoban, football and WebUI agent evaluation"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "write a level or scenario corpus");
  g->add_option("env", gen.env, "sokoban | football")->required();
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out)->required();

  RunConfig run_flags;
  std::string run_config;
  auto* r = app.add_subcommand("run", "evaluate an agent on a corpus");
  add_run_flags(r, run_flags, run_config);
  r->add_option("--agent", run_flags.agent, "idle | random | process:<cmd> | http://host:port/path | interactive");
  r->add_option("--workers", run_flags.workers, "episodes in parallel");

  RunConfig serve_flags;
  std::string serve_config;
  auto* s = app.add_subcommand("serve", "run episodes for a human through the HTTP endpoint");
  add_run_flags(s, serve_flags, serve_config);

  ScoreWebOptions sw;
  std::string weights, sw_out;
  auto* w = app.add_subcommand("score-web", "AES of generated page snapshots against ground truth");
  w->add_option("--gt", sw.gt)->required();
  w->add_option("--gen", sw.gen)->required();
  w->add_option("--weights", weights, "JSON {alpha:{attr:w}, default_alpha, beta}");
  w->add_option("--out", sw_out);

  ReportOptions rep;
  auto* p = app.add_subcommand("report", "aggregate one or two run directories");
  p->add_option("runs", rep.runs)->required();
  p->add_flag("--json", rep.json);
  p->add_option("--samples", rep.samples, "Monte Carlo best-of-N with this many draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*g) return cmd_generate(gen, std::cerr);
    if (*r) return cmd_run(merge(r, run_flags, run_config), std::cerr);
    if (*s) return cmd_serve(merge(s, serve_flags, serve_config), std::cerr);
    if (*w) {
      if (!weights.empty()) sw.weights = weights;
      if (!sw_out.empty()) sw.out = sw_out;
      return cmd_score_web(sw, std::cout, std::cerr);
    }
    if (*p) return cmd_report(rep, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const mage::harness::AgentError& e) {
    std::cerr << "agent error: " << e.what() << "\n";
    return kAgentError;
  } catch (const CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kCorpusError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCorpusError;
  }
  return kOk;
}
