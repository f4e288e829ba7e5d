#include "magebench/sokoban/deadlock.hpp"

#include <algorithm>

namespace mage::sokoban {

namespace {

bool is_wall(const Grid& g, Coord c) { return g.at(c) == Cell::Wall; }

// Box at `c` is pinned against the wall on side `side`; scan along the wall
// in both perpendicular directions.
bool dead_along_wall(const Grid& g, Coord c, Action side) {
  if (!is_wall(g, offset(c, side))) return false;
  const bool vertical_side = side == Action::Up || side == Action::Down;
  const Action dirs[2] = {vertical_side ? Action::Left : Action::Up,
                          vertical_side ? Action::Right : Action::Down};
  for (Action d : dirs) {
    for (Coord x = c; !is_wall(g, x); x = offset(x, d)) {
      if (g.at(x) == Cell::Target) return false;
      if (!is_wall(g, offset(x, side))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<bool> dead_squares(const Grid& grid) {
  std::vector<bool> dead(static_cast<std::size_t>(grid.size()), false);
  for (int i = 0; i < grid.size(); ++i) {
    const Coord c = grid.coord(i);
    if (grid.at(c) != Cell::Floor) continue;
    const bool up = is_wall(grid, offset(c, Action::Up));
    const bool down = is_wall(grid, offset(c, Action::Down));
    const bool left = is_wall(grid, offset(c, Action::Left));
    const bool right = is_wall(grid, offset(c, Action::Right));
    if ((up || down) && (left || right)) {
      dead[i] = true;
      continue;
    }
    for (Action side : kActions) {
      if (dead_along_wall(grid, c, side)) {
        dead[i] = true;
        break;
      }
    }
  }
  return dead;
}

bool frozen_square_at(const Grid& grid, std::span<const Coord> boxes, Coord box) {
  auto has_box = [&](Coord c) { return std::find(boxes.begin(), boxes.end(), c) != boxes.end(); };
  auto blocked = [&](Coord c) { return is_wall(grid, c) || has_box(c); };
  for (int dr = -1; dr <= 0; ++dr) {
    for (int dc = -1; dc <= 0; ++dc) {
      const Coord origin{box.row + dr, box.col + dc};
      bool all_blocked = true;
      bool off_target_box = false;
      for (int r = 0; r < 2 && all_blocked; ++r) {
        for (int c = 0; c < 2; ++c) {
          const Coord cell{origin.row + r, origin.col + c};
          if (!blocked(cell)) {
            all_blocked = false;
            break;
          }
          if (has_box(cell) && grid.at(cell) != Cell::Target) off_target_box = true;
        }
      }
      if (all_blocked && off_target_box) return true;
    }
  }
  return false;
}

bool is_deadlock(const Level& level, std::span<const Coord> boxes) {
  const auto dead = dead_squares(level.grid);
  for (Coord b : boxes) {
    if (level.grid.in_bounds(b) && dead[level.grid.index(b)]) return true;
  }
  for (Coord b : boxes) {
    if (frozen_square_at(level.grid, boxes, b)) return true;
  }
  return false;
}

bool is_deadlock(const State& state) { return is_deadlock(*state.level, state.boxes); }

}  // namespace mage::sokoban
