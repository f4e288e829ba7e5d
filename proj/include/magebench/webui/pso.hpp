#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "magebench/webui/scoring.hpp"

namespace mage::webui {

// One ground-truth page set, several candidate reproductions of it, and
// pairwise preferences among the candidates (first preferred over second).
struct PreferenceTask {
  std::vector<std::vector<PrecomputedPage>> candidates;
  std::vector<std::pair<int, int>> preferences;
};

PreferenceTask make_task(const std::vector<PageSnapshot>& gt, const std::vector<std::vector<PageSnapshot>>& candidates,
                         std::vector<std::pair<int, int>> preferences, const MatchConfig& cfg = {});

// Fraction of preference pairs ordered the same way by AES under `w`; ties count half.
double agreement(const std::vector<PreferenceTask>& tasks, const ScoreWeights& w);

// Every attribute named in some candidate's similarities, sorted.
std::vector<std::string> attribute_names(const std::vector<PreferenceTask>& tasks);

struct PsoConfig {
  int particles = 32;
  int iterations = 60;
  double inertia = 0.72;
  double cognitive = 1.49;
  double social = 1.49;
  double alpha_max = 5.0;
  double beta_max = 2.0;
  std::uint64_t seed = 1;
  std::vector<std::string> attributes;  // empty: derived from the tasks
  unsigned threads = 0;                  // 0: hardware concurrency
};

struct PsoResult {
  ScoreWeights weights;
  double agreement = 0.0;
  std::vector<double> best_by_iteration;
};

// Standard global-best PSO over (alpha per attribute, beta) in
// [0, alpha_max]^k x [0, beta_max]. Particles are evaluated in parallel and
// reduced in index order, so results depend only on the seed.
PsoResult pso_search(const std::vector<PreferenceTask>& tasks, const PsoConfig& cfg = {});

// Mean agreement of `draws` weight vectors drawn uniformly from the same box.
double random_weight_agreement(const std::vector<PreferenceTask>& tasks, const PsoConfig& cfg, int draws);

}  // namespace mage::webui
