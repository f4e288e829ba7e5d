#include "magebench/webui/pso.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace mage::webui {

namespace {

ScoreWeights to_weights(const std::vector<std::string>& names, const std::vector<double>& x) {
  ScoreWeights w;
  for (std::size_t k = 0; k < names.size(); ++k) w.alpha[names[k]] = x[k];
  w.beta = x.back();
  return w;
}

void check_tasks(const std::vector<PreferenceTask>& tasks) {
  std::size_t pairs = 0;
  for (const auto& t : tasks) {
    if (t.candidates.empty()) throw std::invalid_argument("pso: task without candidates");
    for (auto [a, b] : t.preferences) {
      const int n = static_cast<int>(t.candidates.size());
      if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("pso: preference index out of range");
    }
    pairs += t.preferences.size();
  }
  if (pairs == 0) throw std::invalid_argument("pso: no preference pairs");
}

template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

PreferenceTask make_task(const std::vector<PageSnapshot>& gt, const std::vector<std::vector<PageSnapshot>>& candidates,
                         std::vector<std::pair<int, int>> preferences, const MatchConfig& cfg) {
  PreferenceTask t;
  for (const auto& c : candidates) t.candidates.push_back(precompute_aes(c, gt, cfg));
  t.preferences = std::move(preferences);
  return t;
}

double agreement(const std::vector<PreferenceTask>& tasks, const ScoreWeights& w) {
  double agree = 0.0;
  std::size_t pairs = 0;
  for (const auto& t : tasks) {
    std::vector<std::int64_t> score(t.candidates.size());
    for (std::size_t c = 0; c < t.candidates.size(); ++c) score[c] = aes_precomputed(t.candidates[c], w).aes;
    for (auto [a, b] : t.preferences) {
      ++pairs;
      if (score[a] > score[b]) agree += 1.0;
      else if (score[a] == score[b]) agree += 0.5;
    }
  }
  return pairs ? agree / static_cast<double>(pairs) : 0.0;
}

std::vector<std::string> attribute_names(const std::vector<PreferenceTask>& tasks) {
  std::set<std::string> names;
  for (const auto& t : tasks)
    for (const auto& c : t.candidates)
      for (const auto& p : c)
        for (const auto& a : p.atoms)
          for (const auto& [n, s] : a.similarities) names.insert(n);
  return {names.begin(), names.end()};
}

PsoResult pso_search(const std::vector<PreferenceTask>& tasks, const PsoConfig& cfg) {
  check_tasks(tasks);
  if (cfg.particles < 1 || cfg.iterations < 0) throw std::invalid_argument("pso: bad swarm size");
  const auto names = cfg.attributes.empty() ? attribute_names(tasks) : cfg.attributes;
  const std::size_t dims = names.size() + 1;
  std::vector<double> hi(dims, cfg.alpha_max);
  hi.back() = cfg.beta_max;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = static_cast<std::size_t>(cfg.particles);
  std::vector<std::vector<double>> x(n, std::vector<double>(dims)), v = x, best_x;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t d = 0; d < dims; ++d) {
      x[p][d] = unit(rng) * hi[d];
      v[p][d] = (unit(rng) - 0.5) * 0.2 * hi[d];
    }
  }
  std::vector<double> fit(n), best_fit(n);
  auto evaluate = [&] { parallel_for(n, cfg.threads, [&](std::size_t p) { fit[p] = agreement(tasks, to_weights(names, x[p])); }); };

  evaluate();
  best_x = x;
  best_fit = fit;
  std::size_t g = static_cast<std::size_t>(std::max_element(best_fit.begin(), best_fit.end()) - best_fit.begin());
  std::vector<double> g_x = best_x[g];
  double g_fit = best_fit[g];

  PsoResult result;
  result.best_by_iteration.push_back(g_fit);
  for (int it = 0; it < cfg.iterations && g_fit < 1.0; ++it) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t d = 0; d < dims; ++d) {
        const double vmax = 0.25 * hi[d];
        v[p][d] = cfg.inertia * v[p][d] + cfg.cognitive * unit(rng) * (best_x[p][d] - x[p][d]) +
                  cfg.social * unit(rng) * (g_x[d] - x[p][d]);
        v[p][d] = std::clamp(v[p][d], -vmax, vmax);
        x[p][d] = std::clamp(x[p][d] + v[p][d], 0.0, hi[d]);
      }
    }
    evaluate();
    for (std::size_t p = 0; p < n; ++p) {
      if (fit[p] > best_fit[p]) {
        best_fit[p] = fit[p];
        best_x[p] = x[p];
      }
      if (fit[p] > g_fit) {
        g_fit = fit[p];
        g_x = x[p];
      }
    }
    result.best_by_iteration.push_back(g_fit);
  }
  result.weights = to_weights(names, g_x);
  result.agreement = g_fit;
  return result;
}

double random_weight_agreement(const std::vector<PreferenceTask>& tasks, const PsoConfig& cfg, int draws) {
  check_tasks(tasks);
  const auto names = cfg.attributes.empty() ? attribute_names(tasks) : cfg.attributes;
  std::mt19937_64 rng(cfg.seed ^ 0xA5A5A5A5ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double sum = 0.0;
  for (int k = 0; k < draws; ++k) {
    std::vector<double> x(names.size() + 1);
    for (std::size_t d = 0; d < names.size(); ++d) x[d] = unit(rng) * cfg.alpha_max;
    x.back() = unit(rng) * cfg.beta_max;
    sum += agreement(tasks, to_weights(names, x));
  }
  return draws > 0 ? sum / draws : 0.0;
}

}  // namespace mage::webui
