#include "magebench/cli/config.hpp"

#include <cstdlib>
#include <set>

#include "magebench/common/assets.hpp"

namespace mage::cli {

harness::PlannerConfig RunConfig::planner() const {
  const auto env_kind = harness::env_from_name(env).value_or(harness::EnvKind::Sokoban);
  const auto m = harness::mode_from_name(mode).value_or(harness::Mode::Online);
  harness::PlannerConfig p = harness::standard_config(env_kind, m);
  p.action_memory = action_memory;
  p.observation_memory = observation_memory;
  p.max_parse_retries = max_parse_retries;
  if (max_steps) p.max_steps = *max_steps;
  return p;
}

void RunConfig::validate() const {
  const auto e = harness::env_from_name(env);
  if (!e) throw ConfigError("unknown environment '" + env + "'");
  const auto m = harness::mode_from_name(mode);
  if (!m) throw ConfigError("unknown mode '" + mode + "'");
  if (*e == harness::EnvKind::Football && *m == harness::Mode::Global) {
    throw ConfigError("football supports the online mode only");
  }
  if (*e == harness::EnvKind::WebUI && *m == harness::Mode::Online) throw ConfigError("webui runs in the global mode only");
  const bool known_agent = agent == "idle" || agent == "random" || agent == "interactive" ||
                           agent.starts_with("process:") || agent.starts_with("http://");
  if (!known_agent) throw ConfigError("unknown agent '" + agent + "'");
  if (agent.starts_with("process:") && agent.size() == 8) throw ConfigError("process agent without a command");
  if (corpus.empty()) throw ConfigError("no corpus directory given");
  if (repeats < 1) throw ConfigError("repeats must be at least 1");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (limit && *limit < 1) throw ConfigError("limit must be at least 1");
  try {
    planner().validate();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  }
}

namespace {

template <typename T>
T get(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

}  // namespace

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {
      "env",  "mode",  "agent",  "corpus",        "out",           "repeats",       "seed",
      "workers", "levels", "limit", "action_memory", "observation_memory", "max_parse_retries",
      "max_steps", "auto_render", "bind", "interactive_timeout_ms"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) throw ConfigError("unknown config key '" + it.key() + "'");
  }
  if (j.contains("env")) cfg.env = get<std::string>(j, "env");
  if (j.contains("mode")) cfg.mode = get<std::string>(j, "mode");
  if (j.contains("agent")) cfg.agent = get<std::string>(j, "agent");
  if (j.contains("corpus")) cfg.corpus = get<std::string>(j, "corpus");
  if (j.contains("out")) cfg.out = get<std::string>(j, "out");
  if (j.contains("repeats")) cfg.repeats = get<int>(j, "repeats");
  if (j.contains("seed")) cfg.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("workers")) cfg.workers = get<int>(j, "workers");
  if (j.contains("levels")) cfg.levels = get<std::vector<std::string>>(j, "levels");
  if (j.contains("limit")) cfg.limit = j["limit"].is_null() ? std::nullopt : std::optional<int>(get<int>(j, "limit"));
  if (j.contains("action_memory")) cfg.action_memory = get<int>(j, "action_memory");
  if (j.contains("observation_memory")) cfg.observation_memory = get<int>(j, "observation_memory");
  if (j.contains("max_parse_retries")) cfg.max_parse_retries = get<int>(j, "max_parse_retries");
  if (j.contains("max_steps")) {
    cfg.max_steps = j["max_steps"].is_null() ? std::nullopt : std::optional<int>(get<int>(j, "max_steps"));
  }
  if (j.contains("auto_render")) cfg.auto_render = get<bool>(j, "auto_render");
  if (j.contains("bind")) cfg.bind = get<std::string>(j, "bind");
  if (j.contains("interactive_timeout_ms")) {
    cfg.interactive_timeout_ms = j["interactive_timeout_ms"].is_null()
                                     ? std::nullopt
                                     : std::optional<int>(get<int>(j, "interactive_timeout_ms"));
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config " + path.string() + " is not valid JSON");
  RunConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["env"] = cfg.env;
  j["mode"] = cfg.mode;
  j["agent"] = cfg.agent;
  j["corpus"] = cfg.corpus.string();
  j["out"] = cfg.out.string();
  j["repeats"] = cfg.repeats;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["levels"] = cfg.levels;
  j["limit"] = cfg.limit ? nlohmann::ordered_json(*cfg.limit) : nlohmann::ordered_json(nullptr);
  j["action_memory"] = cfg.action_memory;
  j["observation_memory"] = cfg.observation_memory;
  j["max_parse_retries"] = cfg.max_parse_retries;
  j["max_steps"] = cfg.planner().max_steps;
  j["auto_render"] = cfg.auto_render;
  j["bind"] = cfg.bind;
  j["interactive_timeout_ms"] =
      cfg.interactive_timeout_ms ? nlohmann::ordered_json(*cfg.interactive_timeout_ms) : nlohmann::ordered_json(nullptr);
  return j;
}

Endpoint resolve_bind(const std::string& explicit_bind) {
  std::string spec = explicit_bind;
  if (spec.empty()) {
    const char* env = std::getenv("MAGEBENCH_BIND");
    spec = (env != nullptr && *env != '\0') ? env : kDefaultBind;
  }
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos || colon == 0) throw ConfigError("bind address must be host:port, got '" + spec + "'");
  Endpoint e;
  e.host = spec.substr(0, colon);
  try {
    std::size_t used = 0;
    e.port = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ConfigError("bad port in bind address '" + spec + "'");
  }
  if (e.port < 0 || e.port > 65535) throw ConfigError("port out of range in '" + spec + "'");
  return e;
}

}  // namespace mage::cli
