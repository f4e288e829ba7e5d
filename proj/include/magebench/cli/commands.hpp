#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "magebench/cli/config.hpp"
#include "magebench/metrics/aggregate.hpp"

namespace mage::cli {

struct GenerateOptions {
  std::string env = "sokoban";
  std::uint64_t seed = 1;
  std::filesystem::path out;
};

// Sokoban: levels/<id>.txt plus manifest.json. Football: scenarios/<id>.json
// plus manifest.json. Re-running with the same seed rewrites identical files.
int cmd_generate(const GenerateOptions& opt, std::ostream& log);

// Writes config.json, episodes.jsonl (one EpisodeResult per line, in task
// order, flushed as soon as the prefix is complete), report.json and
// report.txt. An agent failure stops the run; finished episodes stay on disk.
int cmd_run(const RunConfig& cfg, std::ostream& log);

// The interactive agent on the bound endpoint.
int cmd_serve(RunConfig cfg, std::ostream& log);

struct ScoreWebOptions {
  std::filesystem::path gt;   // <gt>/<page>/[gt/]*.json
  std::filesystem::path gen;  // <gen>/<page>/*.json
  std::optional<std::filesystem::path> weights;
  std::optional<std::filesystem::path> out;
};

int cmd_score_web(const ScoreWebOptions& opt, std::ostream& out, std::ostream& log);

struct ReportOptions {
  std::vector<std::filesystem::path> runs;
  bool json = false;
  std::optional<int> samples;  // Monte Carlo best-of-N draws; exact when absent
};

int cmd_report(const ReportOptions& opt, std::ostream& out, std::ostream& log);

// Shared by run/report: episodes.jsonl of a run directory.
std::vector<harness::EpisodeResult> load_episodes(const std::filesystem::path& run_dir);

}  // namespace mage::cli
