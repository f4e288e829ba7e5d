#include "magebench/metrics/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "magebench/metrics/best_of_n.hpp"

namespace mage::metrics {

RunSpec standard_spec(const std::string& env, const std::string& mode) {
  RunSpec s;
  s.env = env;
  s.mode = mode;
  s.repeats = env == "football" ? 10 : 3;
  return s;
}

double sample_sd(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

namespace {

double mean_of(std::span<const double> xs) {
  return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

AggregateReport aggregate(std::span<const harness::EpisodeResult> results, const RunSpec& spec) {
  if (spec.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  AggregateReport rep;
  rep.env = spec.env;
  rep.mode = spec.mode;
  rep.repeats = spec.repeats;

  std::map<std::string, std::vector<double>> by_level;
  std::set<std::pair<std::string, int>> seen;
  // pooled classification must not depend on input order either
  std::vector<const harness::EpisodeResult*> ordered;
  for (const auto& r : results) {
    if (!seen.emplace(r.level_id, r.repeat).second) {
      throw std::invalid_argument("duplicate result for " + r.level_id + " repeat " + std::to_string(r.repeat));
    }
    by_level[r.level_id].push_back(r.score);
    ordered.push_back(&r);
  }
  std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
    return std::tie(a->level_id, a->repeat) < std::tie(b->level_id, b->repeat);
  });
  for (const auto& l : spec.levels) by_level.try_emplace(l);

  std::vector<double> level_means;
  for (auto& [level, scores] : by_level) {
    std::sort(scores.begin(), scores.end());
    if (static_cast<int>(scores.size()) < spec.repeats) {
      rep.complete = false;
      rep.missing.push_back(level + ": " + std::to_string(scores.size()) + " of " + std::to_string(spec.repeats));
    }
    if (scores.empty()) continue;
    LevelStats s;
    s.level = level;
    s.scores = scores;
    s.mean = mean_of(scores);
    s.sd = sample_sd(scores);
    s.min = scores.front();
    s.max = scores.back();
    level_means.push_back(s.mean);
    rep.levels.push_back(std::move(s));
  }
  rep.episodes = static_cast<int>(results.size());
  rep.mean = mean_of(level_means);
  rep.sd = sample_sd(level_means);
  rep.stderr_mean = level_means.empty() ? 0.0 : rep.sd / std::sqrt(static_cast<double>(level_means.size()));
  rep.band = 2.0 * rep.stderr_mean;

  std::vector<harness::OutputRecord> pooled;
  for (const auto* r : ordered) {
    ++rep.errors.episodes;
    if (r->errors.kind == harness::ErrorKind::InvalidActions) ++rep.errors.invalid;
    if (r->errors.kind == harness::ErrorKind::RepeatingActions) ++rep.errors.repeating;
    if (r->errors.ife) ++rep.errors.ife;
    for (auto& o : r->outputs()) pooled.push_back(std::move(o));
  }
  if (!pooled.empty()) rep.errors.pooled = harness::classify_errors(pooled);

  if (!rep.levels.empty()) {
    std::size_t min_samples = rep.levels.front().scores.size();
    std::vector<std::vector<double>> samples;
    for (const auto& s : rep.levels) {
      min_samples = std::min(min_samples, s.scores.size());
      samples.push_back(s.scores);
    }
    for (int n = 1; n <= static_cast<int>(min_samples); ++n) rep.best_of_n.emplace_back(n, best_of_n_exact(samples, n));
  }
  return rep;
}

PairedDifference paired_difference(const AggregateReport& a, const AggregateReport& b) {
  std::map<std::string, double> bm;
  for (const auto& s : b.levels) bm[s.level] = s.mean;
  std::vector<double> d;
  for (const auto& s : a.levels) {
    if (auto it = bm.find(s.level); it != bm.end()) d.push_back(s.mean - it->second);
  }
  PairedDifference out;
  out.levels = static_cast<int>(d.size());
  out.mean = mean_of(d);
  out.stderr_mean = d.empty() ? 0.0 : sample_sd(d) / std::sqrt(static_cast<double>(d.size()));
  return out;
}

}  // namespace mage::metrics
