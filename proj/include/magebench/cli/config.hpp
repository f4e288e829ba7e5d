#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "magebench/harness/planner.hpp"

namespace mage::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kAgentError = 2, kCorpusError = 3 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kDefaultBind = "127.0.0.1:8765";

// Everything a run needs. Config files use the same field names as
// to_json; unknown keys are rejected.
struct RunConfig {
  std::string env = "sokoban";
  std::string mode = "online";
  // idle | random | process:<command> | http://<host>:<port>/<path> | interactive
  std::string agent = "random";
  std::filesystem::path corpus;
  std::filesystem::path out = "runs/latest";
  int repeats = 3;
  std::uint64_t seed = 1;
  int workers = 1;
  std::vector<std::string> levels;  // empty: the whole corpus
  std::optional<int> limit;         // first k levels after filtering
  int action_memory = 5;
  int observation_memory = 1;
  int max_parse_retries = 2;
  std::optional<int> max_steps;  // default: 50 Sokoban, 400 football
  bool auto_render = true;
  std::string bind;  // empty: MAGEBENCH_BIND, then kDefaultBind
  std::optional<int> interactive_timeout_ms;

  harness::PlannerConfig planner() const;
  // Throws ConfigError.
  void validate() const;
};

void apply_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const RunConfig& cfg);

struct Endpoint {
  std::string host;
  int port = 0;
};
// "host:port"; an explicit value wins over MAGEBENCH_BIND.
Endpoint resolve_bind(const std::string& explicit_bind);

}  // namespace mage::cli
