#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "magebench/sokoban/sokoban.hpp"

namespace mage::sokoban {

struct TierSpec {
  int grid_size = 7;      // square grid including the outer wall
  int boxes = 1;
  int min_optimal = 1;    // reject levels solvable faster than this
  int floor_cells = 14;   // carved room size
  int reverse_moves = 20; // length of each reverse playout
  int corpus_count = 0;   // levels of this tier in the default corpus
};

// Index 0 is tier 1. Grid size, box count and minimum optimal length are
// non-decreasing with the tier; counts sum to 182.
const std::array<TierSpec, 8>& tier_table();

inline constexpr int kMaxOptimalSteps = 50;

// Reverse-play generation: carve a room, place boxes on their targets, then
// pull them backwards with random player walks. The candidate is kept only
// if solve_bfs finds a plan of length in [min_optimal, 50]. Deterministic in
// (tier, seed). Throws std::runtime_error when the attempt budget runs out.
Level generate_level(int tier, std::uint64_t seed, int max_attempts = 4000);

// The default 182-level corpus; level ids are "t<tier>-<nnn>".
std::vector<Level> generate_corpus(std::uint64_t seed);

}  // namespace mage::sokoban
