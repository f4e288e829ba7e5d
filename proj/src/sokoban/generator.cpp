#include "magebench/sokoban/generator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "magebench/common/seed.hpp"
#include "magebench/sokoban/deadlock.hpp"
#include "magebench/sokoban/solver.hpp"

namespace mage::sokoban {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

// Random-walk carving inside the outer wall ring.
Grid carve_room(int size, int floor_cells, Rng& rng) {
  Grid g(size, size, Cell::Wall);
  const int inner = size - 2;
  const int target_floor = std::min(floor_cells, inner * inner);
  Coord cur{1 + pick(rng, inner), 1 + pick(rng, inner)};
  g.set(cur, Cell::Floor);
  int carved = 1;
  Action dir = kActions[pick(rng, 4)];
  int guard = 0;
  while (carved < target_floor && guard++ < 20000) {
    if (pick(rng, 100) < 35) dir = kActions[pick(rng, 4)];
    const Coord nxt = offset(cur, dir);
    if (nxt.row < 1 || nxt.col < 1 || nxt.row > inner || nxt.col > inner) {
      dir = kActions[pick(rng, 4)];
      continue;
    }
    cur = nxt;
    if (g.at(cur) == Cell::Wall) {
      g.set(cur, Cell::Floor);
      ++carved;
    }
  }
  return g;
}

struct Playout {
  std::vector<Coord> boxes;
  Coord player;
  long score = 0;
};

// Player walks randomly; stepping away from an adjacent box may drag it along.
Playout reverse_play(const Grid& g, std::vector<Coord> boxes, Coord player, int moves, Rng& rng) {
  const std::vector<Coord> origin = boxes;
  int pulls = 0;
  for (int i = 0; i < moves; ++i) {
    const Action a = kActions[pick(rng, 4)];
    const Coord dest = offset(player, a);
    if (!g.passable(dest) || std::find(boxes.begin(), boxes.end(), dest) != boxes.end()) continue;
    Action opposite = a == Action::Up ? Action::Down
                    : a == Action::Down ? Action::Up
                    : a == Action::Left ? Action::Right
                                        : Action::Left;
    const Coord behind = offset(player, opposite);
    auto it = std::find(boxes.begin(), boxes.end(), behind);
    if (it != boxes.end() && pick(rng, 100) < 70) {
      *it = player;
      ++pulls;
    }
    player = dest;
  }
  long displacement = 0;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    displacement += std::abs(boxes[b].row - origin[b].row) + std::abs(boxes[b].col - origin[b].col);
  }
  std::sort(boxes.begin(), boxes.end());
  return {boxes, player, displacement * (1 + pulls)};
}

std::vector<Coord> floor_cells_of(const Grid& g) {
  std::vector<Coord> out;
  for (int i = 0; i < g.size(); ++i) {
    if (g.at(g.coord(i)) != Cell::Wall) out.push_back(g.coord(i));
  }
  return out;
}

}  // namespace

const std::array<TierSpec, 8>& tier_table() {
  static const std::array<TierSpec, 8> table = {{
      {7, 1, 3, 12, 20, 25},
      {8, 1, 6, 16, 30, 25},
      {9, 2, 8, 18, 40, 25},
      {9, 2, 12, 20, 50, 25},
      {10, 3, 14, 22, 60, 22},
      {11, 3, 18, 25, 80, 20},
      {12, 4, 20, 27, 100, 20},
      {13, 4, 24, 30, 120, 20},
  }};
  return table;
}

Level generate_level(int tier, std::uint64_t seed, int max_attempts) {
  if (tier < 1 || tier > 8) throw std::invalid_argument("generate_level: tier outside 1..8");
  const TierSpec& spec = tier_table()[tier - 1];
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(tier), static_cast<std::uint64_t>(attempt)}));
    Grid grid = carve_room(spec.grid_size, spec.floor_cells, rng);
    std::vector<Coord> cells = floor_cells_of(grid);
    if (static_cast<int>(cells.size()) < spec.boxes + 2) continue;
    for (int i = static_cast<int>(cells.size()) - 1; i > 0; --i) std::swap(cells[i], cells[pick(rng, i + 1)]);
    std::vector<Coord> targets(cells.begin(), cells.begin() + spec.boxes);
    const Coord player = cells[spec.boxes];
    for (Coord t : targets) grid.set(t, Cell::Target);

    Playout best;
    for (int p = 0; p < 4; ++p) {
      Playout cand = reverse_play(grid, targets, player, spec.reverse_moves, rng);
      if (cand.score > best.score) best = cand;
    }
    if (best.score == 0) continue;

    Level level;
    level.grid = grid;
    level.targets = targets;
    std::sort(level.targets.begin(), level.targets.end());
    level.boxes = best.boxes;
    level.player = best.player;
    level.difficulty = tier;
    if (boxes_on_targets(level, level.boxes)) continue;
    if (is_deadlock(level, level.boxes)) continue;

    SolveOptions opts;
    opts.max_steps = kMaxOptimalSteps;
    opts.max_states = 3'000'000;
    const auto plan = solve_bfs(level, opts);
    if (!plan || static_cast<int>(plan->size()) < spec.min_optimal) continue;
    level.optimal_steps = static_cast<int>(plan->size());
    const auto trace = reward_trace(level, *plan);
    level.r_best = std::accumulate(trace.begin(), trace.end(), 0.0);
    level.validate();
    return level;
  }
  throw std::runtime_error(fmt::format("generate_level: no level for tier {} after {} attempts",
                                       tier, max_attempts));
}

std::vector<Level> generate_corpus(std::uint64_t seed) {
  std::vector<Level> out;
  for (int tier = 1; tier <= 8; ++tier) {
    const int count = tier_table()[tier - 1].corpus_count;
    for (int i = 0; i < count; ++i) {
      Level l = generate_level(tier, derive_seed({seed, static_cast<std::uint64_t>(tier),
                                                  static_cast<std::uint64_t>(i)}));
      l.id = fmt::format("t{}-{:03}", tier, i + 1);
      out.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace mage::sokoban
