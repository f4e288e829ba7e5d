#include "magebench/sokoban/sokoban.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace mage::sokoban {

std::string_view action_name(Action a) {
  switch (a) {
    case Action::Up: return "Up";
    case Action::Down: return "Down";
    case Action::Left: return "Left";
    case Action::Right: return "Right";
  }
  return "?";
}

std::optional<Action> action_from_name(std::string_view name) {
  for (Action a : kActions) {
    const auto n = action_name(a);
    if (n.size() == name.size() &&
        std::equal(n.begin(), n.end(), name.begin(), [](char x, char y) {
          return std::tolower(static_cast<unsigned char>(x)) ==
                 std::tolower(static_cast<unsigned char>(y));
        })) {
      return a;
    }
  }
  return std::nullopt;
}

Coord offset(Coord c, Action a) {
  switch (a) {
    case Action::Up: return {c.row - 1, c.col};
    case Action::Down: return {c.row + 1, c.col};
    case Action::Left: return {c.row, c.col - 1};
    case Action::Right: return {c.row, c.col + 1};
  }
  return c;
}

Grid::Grid(int width, int height, Cell fill)
    : width_(width), height_(height), cells_(static_cast<std::size_t>(width) * height, fill) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("grid: non-positive size");
}

void Level::validate() const {
  if (boxes.empty()) throw std::invalid_argument("level: needs at least one box");
  if (boxes.size() != targets.size()) throw std::invalid_argument("level: |boxes| != |targets|");
  if (!std::is_sorted(boxes.begin(), boxes.end()) ||
      std::adjacent_find(boxes.begin(), boxes.end()) != boxes.end()) {
    throw std::invalid_argument("level: boxes must be sorted and distinct");
  }
  for (Coord b : boxes) {
    if (!grid.passable(b)) throw std::invalid_argument("level: box on wall");
  }
  for (Coord t : targets) {
    if (grid.at(t) != Cell::Target) throw std::invalid_argument("level: target list mismatch");
  }
  if (!grid.passable(player)) throw std::invalid_argument("level: player on wall");
  if (std::binary_search(boxes.begin(), boxes.end(), player)) {
    throw std::invalid_argument("level: player on box");
  }
  if (difficulty < 1 || difficulty > 8) throw std::invalid_argument("level: tier outside 1..8");
}

bool State::has_box(Coord c) const { return std::binary_search(boxes.begin(), boxes.end(), c); }

bool boxes_on_targets(const Level& level, std::span<const Coord> boxes) {
  return std::all_of(boxes.begin(), boxes.end(),
                     [&](Coord b) { return level.grid.at(b) == Cell::Target; });
}

State initial_state(std::shared_ptr<const Level> level) {
  State s;
  s.boxes = level->boxes;
  s.player = level->player;
  s.done = boxes_on_targets(*level, s.boxes);
  s.level = std::move(level);
  return s;
}

std::pair<State, StepEvents> step(const State& state, Action action) {
  if (state.done) throw std::logic_error("sokoban step: episode already done");
  const Grid& grid = state.level->grid;
  State next = state;
  next.steps_taken += 1;
  StepEvents ev;

  const Coord dest = offset(state.player, action);
  if (!grid.passable(dest)) return {next, ev};

  if (state.has_box(dest)) {
    const Coord beyond = offset(dest, action);
    if (!grid.passable(beyond) || state.has_box(beyond)) return {next, ev};
    auto it = std::lower_bound(next.boxes.begin(), next.boxes.end(), dest);
    next.boxes.erase(it);
    next.boxes.insert(std::lower_bound(next.boxes.begin(), next.boxes.end(), beyond), beyond);
    ev.pushed = true;
    const bool was_on = grid.at(dest) == Cell::Target;
    const bool now_on = grid.at(beyond) == Cell::Target;
    ev.pushed_onto_target = !was_on && now_on;
    ev.pushed_off_target = was_on && !now_on;
  }
  next.player = dest;
  ev.moved = true;
  next.done = boxes_on_targets(*state.level, next.boxes);
  ev.completed = next.done;
  return {next, ev};
}

double reward_step(const StepEvents& events, const RewardTable& table) {
  if (events.completed) return table.done_bonus;
  if (events.pushed_onto_target) return table.push_to_target;
  if (events.pushed_off_target) return table.push_off_target;
  return table.step_penalty;
}

double score_episode(std::span<const double> trace, double r_best) {
  double cumulative = 0.0;
  double best = 0.0;
  for (double r : trace) {
    cumulative += r;
    best = std::max(best, cumulative);
  }
  return best - r_best + 100.0;
}

std::vector<double> reward_trace(const Level& level, std::span<const Action> plan,
                                 const RewardTable& table) {
  auto shared = std::make_shared<const Level>(level);
  State s = initial_state(shared);
  std::vector<double> trace;
  for (Action a : plan) {
    if (s.done) break;
    auto [next, ev] = step(s, a);
    trace.push_back(reward_step(ev, table));
    s = std::move(next);
  }
  return trace;
}

}  // namespace mage::sokoban
