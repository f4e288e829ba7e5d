#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mage::sokoban {

enum class Cell : std::uint8_t { Wall, Floor, Target };

enum class Action : std::uint8_t { Up, Down, Left, Right };

inline constexpr std::array<Action, 4> kActions = {Action::Up, Action::Down, Action::Left,
                                                   Action::Right};

std::string_view action_name(Action a);
std::optional<Action> action_from_name(std::string_view name);

struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

Coord offset(Coord c, Action a);

class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, Cell fill = Cell::Wall);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.col >= 0 && c.row < height_ && c.col < width_;
  }
  // Out-of-bounds reads as Wall.
  Cell at(Coord c) const { return in_bounds(c) ? cells_[index(c)] : Cell::Wall; }
  void set(Coord c, Cell v) { cells_.at(index(c)) = v; }
  bool passable(Coord c) const { return at(c) != Cell::Wall; }
  int index(Coord c) const { return c.row * width_ + c.col; }
  Coord coord(int index) const { return {index / width_, index % width_}; }
  int size() const { return width_ * height_; }

  bool operator==(const Grid&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Cell> cells_;
};

struct Level {
  std::string id;
  Grid grid;
  std::vector<Coord> boxes;    // sorted
  std::vector<Coord> targets;  // sorted
  Coord player;
  int difficulty = 1;
  int optimal_steps = 0;
  double r_best = 0.0;

  // Throws std::invalid_argument when the structural invariants fail
  // (box/target count mismatch, occupants on walls, overlapping boxes).
  void validate() const;
  bool operator==(const Level&) const = default;
};

struct State {
  std::shared_ptr<const Level> level;
  std::vector<Coord> boxes;  // sorted
  Coord player;
  int steps_taken = 0;
  bool done = false;

  bool has_box(Coord c) const;
};

State initial_state(std::shared_ptr<const Level> level);
bool boxes_on_targets(const Level& level, std::span<const Coord> boxes);

struct StepEvents {
  bool moved = false;
  bool pushed = false;
  bool pushed_onto_target = false;
  bool pushed_off_target = false;
  bool completed = false;
};

// Pre: !state.done (throws std::logic_error otherwise). Blocked moves are
// legal no-ops that still consume a step.
std::pair<State, StepEvents> step(const State& state, Action action);

struct RewardTable {
  double push_to_target = 4.5;
  double push_off_target = -5.5;
  double done_bonus = 54.5;
  double step_penalty = -0.5;
};

inline constexpr RewardTable kDefaultRewards{};

double reward_step(const StepEvents& events, const RewardTable& table = kDefaultRewards);

// max over prefixes of the cumulative reward (empty prefix counts as 0),
// shifted so that the optimal trajectory scores exactly 100.
double score_episode(std::span<const double> trace, double r_best);

// Reward collected by replaying `plan` from the level's initial pose.
// Stops at the terminal state.
std::vector<double> reward_trace(const Level& level, std::span<const Action> plan,
                                 const RewardTable& table = kDefaultRewards);

}  // namespace mage::sokoban
