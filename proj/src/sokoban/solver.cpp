#include "magebench/sokoban/solver.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "magebench/sokoban/deadlock.hpp"

namespace mage::sokoban {

namespace {

constexpr int kMaxBoxes = 7;

// Packed signature: byte 0 = player cell, bytes 1..n = sorted box cells.
using Key = std::uint64_t;

struct Packed {
  std::uint8_t player = 0;
  std::uint8_t count = 0;
  std::array<std::uint8_t, kMaxBoxes> boxes{};

  Key key() const {
    Key k = player;
    for (int i = 0; i < count; ++i) k |= static_cast<Key>(boxes[i]) << (8 * (i + 1));
    return k;
  }
  static Packed from_key(Key k, int count) {
    Packed p;
    p.count = static_cast<std::uint8_t>(count);
    p.player = static_cast<std::uint8_t>(k & 0xFF);
    for (int i = 0; i < count; ++i) p.boxes[i] = static_cast<std::uint8_t>((k >> (8 * (i + 1))) & 0xFF);
    return p;
  }
  int find_box(int cell) const {
    for (int i = 0; i < count; ++i) {
      if (boxes[i] == cell) return i;
    }
    return -1;
  }
  void move_box(int slot, int cell) {
    boxes[slot] = static_cast<std::uint8_t>(cell);
    // restore sorted order around the changed slot
    while (slot > 0 && boxes[slot - 1] > boxes[slot]) {
      std::swap(boxes[slot - 1], boxes[slot]);
      --slot;
    }
    while (slot + 1 < count && boxes[slot + 1] < boxes[slot]) {
      std::swap(boxes[slot + 1], boxes[slot]);
      ++slot;
    }
  }
};

struct Node {
  Key parent;
  Action action;
};

}  // namespace

std::optional<std::vector<Action>> solve_bfs(const Level& level, const SolveOptions& options,
                                             SolveStats* stats) {
  const Grid& grid = level.grid;
  if (grid.size() > 256) throw std::invalid_argument("solve_bfs: grid larger than 256 cells");
  if (static_cast<int>(level.boxes.size()) > kMaxBoxes) {
    throw std::invalid_argument("solve_bfs: too many boxes");
  }
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  st = {};

  const int n_boxes = static_cast<int>(level.boxes.size());
  const int n_cells = grid.size();
  // neighbor[cell][action] or -1 for walls
  std::vector<std::array<int, 4>> neighbor(n_cells);
  std::vector<bool> target(n_cells, false);
  for (int i = 0; i < n_cells; ++i) {
    const Coord c = grid.coord(i);
    target[i] = grid.at(c) == Cell::Target;
    for (std::size_t a = 0; a < kActions.size(); ++a) {
      const Coord d = offset(c, kActions[a]);
      neighbor[i][a] = grid.passable(d) ? grid.index(d) : -1;
    }
  }
  const std::vector<bool> dead = dead_squares(grid);

  Packed start;
  start.count = static_cast<std::uint8_t>(n_boxes);
  start.player = static_cast<std::uint8_t>(grid.index(level.player));
  for (int i = 0; i < n_boxes; ++i) start.boxes[i] = static_cast<std::uint8_t>(grid.index(level.boxes[i]));

  auto solved = [&](const Packed& p) {
    for (int i = 0; i < p.count; ++i) {
      if (!target[p.boxes[i]]) return false;
    }
    return true;
  };
  if (solved(start)) return std::vector<Action>{};

  std::unordered_map<Key, Node> seen;
  seen.reserve(1 << 16);
  const Key start_key = start.key();
  seen.emplace(start_key, Node{start_key, Action::Up});

  std::vector<Key> frontier{start_key};
  std::vector<Key> next_frontier;
  std::vector<Coord> box_coords(n_boxes);

  auto reconstruct = [&](Key k) {
    std::vector<Action> plan;
    while (k != start_key) {
      const Node& n = seen.at(k);
      plan.push_back(n.action);
      k = n.parent;
    }
    std::reverse(plan.begin(), plan.end());
    return plan;
  };

  for (int depth = 0; depth < options.max_steps && !frontier.empty(); ++depth) {
    next_frontier.clear();
    for (Key k : frontier) {
      const Packed cur = Packed::from_key(k, n_boxes);
      for (std::size_t a = 0; a < kActions.size(); ++a) {
        const int dest = neighbor[cur.player][a];
        if (dest < 0) continue;
        Packed nxt = cur;
        nxt.player = static_cast<std::uint8_t>(dest);
        const int slot = cur.find_box(dest);
        if (slot >= 0) {
          const int beyond = neighbor[dest][a];
          if (beyond < 0 || cur.find_box(beyond) >= 0) continue;
          nxt.move_box(slot, beyond);
          if (options.prune_deadlocks) {
            bool dl = !target[beyond] && dead[beyond];
            if (!dl) {
              for (int i = 0; i < n_boxes; ++i) box_coords[i] = grid.coord(nxt.boxes[i]);
              dl = frozen_square_at(grid, box_coords, grid.coord(beyond));
            }
            if (dl) {
              ++st.states_pruned;
              continue;
            }
          }
        }
        const Key nk = nxt.key();
        auto [it, inserted] = seen.emplace(nk, Node{k, kActions[a]});
        if (!inserted) continue;
        ++st.states_visited;
        if (slot >= 0 && solved(nxt)) return reconstruct(nk);
        if (seen.size() > options.max_states) {
          st.hit_state_cap = true;
          return std::nullopt;
        }
        next_frontier.push_back(nk);
      }
    }
    frontier.swap(next_frontier);
  }
  return std::nullopt;
}

}  // namespace mage::sokoban
