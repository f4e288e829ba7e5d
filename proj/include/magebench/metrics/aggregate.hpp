#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "magebench/harness/classify.hpp"
#include "magebench/harness/episode_result.hpp"

namespace mage::metrics {

struct RunSpec {
  std::string env;
  std::string mode;
  int repeats = 3;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> levels;  // expected level ids; empty: whatever the results cover
};

// Sokoban and WebUI repeat 3 times, football 10.
RunSpec standard_spec(const std::string& env, const std::string& mode);

struct LevelStats {
  std::string level;
  std::vector<double> scores;  // sorted
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for a single sample
  double min = 0.0;
  double max = 0.0;
};

struct ErrorTally {
  int episodes = 0;
  int invalid = 0;
  int repeating = 0;
  int ife = 0;
  harness::ErrorClassification pooled;  // over every output of the run
};

struct AggregateReport {
  std::string env;
  std::string mode;
  int repeats = 0;
  std::vector<LevelStats> levels;  // sorted by level id
  double mean = 0.0;               // mean of per-level means
  double sd = 0.0;                 // sample sd of per-level means
  double stderr_mean = 0.0;        // sd / sqrt(levels)
  double band = 0.0;               // 2 * stderr_mean
  int episodes = 0;
  bool complete = true;
  std::vector<std::string> missing;  // "<level>: k of n"
  ErrorTally errors;
  std::vector<std::pair<int, double>> best_of_n;  // exact, N = 1..min samples
};

// Results are grouped by level; duplicates of a (level, repeat) pair are
// an error (std::invalid_argument). Input order does not matter.
AggregateReport aggregate(std::span<const harness::EpisodeResult> results, const RunSpec& spec);

double sample_sd(std::span<const double> xs);

// Mean and standard error of per-level differences a - b, matched by level.
struct PairedDifference {
  double mean = 0.0;
  double stderr_mean = 0.0;
  int levels = 0;
};
PairedDifference paired_difference(const AggregateReport& a, const AggregateReport& b);

}  // namespace mage::metrics
