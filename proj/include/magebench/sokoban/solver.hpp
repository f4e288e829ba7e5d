#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "magebench/sokoban/sokoban.hpp"

namespace mage::sokoban {

struct SolveOptions {
  int max_steps = 50;
  // Discard successors that is_deadlock flags. Plan length is unaffected
  // because the deadlock test is sound.
  bool prune_deadlocks = true;
  // Hard cap on distinct states; exceeding it reports "no plan".
  std::size_t max_states = 8'000'000;
};

struct SolveStats {
  std::size_t states_visited = 0;
  std::size_t states_pruned = 0;
  bool hit_state_cap = false;
};

// Minimum-length move sequence that puts every box on a target, or nullopt
// when none exists within options.max_steps. Breadth-first over exact
// (player, boxes) signatures.
std::optional<std::vector<Action>> solve_bfs(const Level& level, const SolveOptions& options,
                                             SolveStats* stats = nullptr);

inline std::optional<std::vector<Action>> solve_bfs(const Level& level, int max_steps = 50) {
  SolveOptions o;
  o.max_steps = max_steps;
  return solve_bfs(level, o);
}

}  // namespace mage::sokoban
