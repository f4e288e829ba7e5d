#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mage::metrics {

// Mean over levels of E[max of n samples drawn without replacement],
// computed from order statistics. Throws std::invalid_argument when n < 1
// or a level has fewer than n samples.
double best_of_n_exact(std::span<const std::vector<double>> per_level, int n);

// Same quantity estimated from `draws` random subsets per level.
double best_of_n_sampled(std::span<const std::vector<double>> per_level, int n, std::uint64_t seed,
                         int draws = 1000);

}  // namespace mage::metrics
