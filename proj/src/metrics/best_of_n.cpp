#include "magebench/metrics/best_of_n.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "magebench/common/seed.hpp"

namespace mage::metrics {

namespace {

void check(std::span<const std::vector<double>> per_level, int n) {
  if (per_level.empty()) throw std::invalid_argument("best-of-N needs at least one level");
  if (n < 1) throw std::invalid_argument("best-of-N needs N >= 1");
  for (const auto& s : per_level) {
    if (static_cast<int>(s.size()) < n) throw std::invalid_argument("a level has fewer samples than N");
  }
}

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double best_of_n_exact(std::span<const std::vector<double>> per_level, int n) {
  check(per_level, n);
  double total = 0.0;
  for (const auto& samples : per_level) {
    std::vector<double> x = samples;
    std::sort(x.begin(), x.end());
    const int m = static_cast<int>(x.size());
    // P(the i-th smallest is the max of a random n-subset) = C(i-1, n-1) / C(m, n)
    const double denom = log_choose(m, n);
    double e = 0.0;
    for (int i = n; i <= m; ++i) e += x[i - 1] * std::exp(log_choose(i - 1, n - 1) - denom);
    total += e;
  }
  return total / static_cast<double>(per_level.size());
}

double best_of_n_sampled(std::span<const std::vector<double>> per_level, int n, std::uint64_t seed, int draws) {
  check(per_level, n);
  if (draws < 1) throw std::invalid_argument("draws must be positive");
  double total = 0.0;
  for (std::size_t l = 0; l < per_level.size(); ++l) {
    std::mt19937_64 rng(derive_seed({seed, l}));
    std::vector<double> x = per_level[l];
    double acc = 0.0;
    for (int d = 0; d < draws; ++d) {
      // partial Fisher-Yates: the first n slots form the subset
      for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), x.size() - 1);
        std::swap(x[static_cast<std::size_t>(i)], x[pick(rng)]);
      }
      acc += *std::max_element(x.begin(), x.begin() + n);
    }
    total += acc / draws;
  }
  return total / static_cast<double>(per_level.size());
}

}  // namespace mage::metrics
