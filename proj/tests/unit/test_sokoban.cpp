#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "magebench/sokoban/deadlock.hpp"
#include "magebench/sokoban/generator.hpp"
#include "magebench/sokoban/level_io.hpp"
#include "magebench/sokoban/render.hpp"
#include "magebench/sokoban/solver.hpp"
#include "support/sokoban_oracle.hpp"

using namespace mage::sokoban;
namespace oracle = mage::sokoban::oracle;

namespace {

State state_of(const std::string& text) {
  return initial_state(std::make_shared<const Level>(parse_level(text)));
}

}  // namespace

TEST_CASE("step pushes a box onto the target to its right") {
  State s = state_of("; tier=1\n#####\n#@$.#\n#####\n");
  auto [n, ev] = step(s, Action::Right);
  CHECK(ev.pushed);
  CHECK(ev.pushed_onto_target);
  CHECK(ev.completed);
  CHECK(n.player == Coord{1, 2});
  CHECK(n.boxes == std::vector<Coord>{{1, 3}});
  CHECK(n.done);
}

TEST_CASE("walking into a wall only consumes a step") {
  State s = state_of("#####\n#@$.#\n#####\n");
  auto [n, ev] = step(s, Action::Up);
  CHECK_FALSE(ev.moved);
  CHECK(n.player == s.player);
  CHECK(n.boxes == s.boxes);
  CHECK(n.steps_taken == s.steps_taken + 1);
}

TEST_CASE("two boxes in a row cannot be pushed") {
  State s = state_of("#######\n#@$$..#\n#######\n");
  auto [n, ev] = step(s, Action::Right);
  CHECK_FALSE(ev.moved);
  CHECK(n.player == s.player);
  CHECK(n.boxes == s.boxes);
}

TEST_CASE("stepping a finished episode is a precondition violation") {
  State s = state_of("####\n#@*#\n####\n");
  CHECK(s.done);
  CHECK_THROWS_AS(step(s, Action::Left), std::logic_error);
}

TEST_CASE("reward table cases") {
  StepEvents push_on;
  push_on.moved = push_on.pushed = push_on.pushed_onto_target = true;
  CHECK(reward_step(push_on) == 4.5);
  StepEvents plain;
  plain.moved = true;
  CHECK(reward_step(plain) == -0.5);
  CHECK(reward_step(StepEvents{}) == -0.5);
  StepEvents off;
  off.moved = off.pushed = off.pushed_off_target = true;
  CHECK(reward_step(off) == -5.5);
  StepEvents done = push_on;
  done.completed = true;
  CHECK(reward_step(done) == 54.5);
}

TEST_CASE("target-to-target push keeps the on-target count and costs a step") {
  State s = state_of("######\n#@*.$#\n#    #\n######\n");
  auto [n, ev] = step(s, Action::Right);
  CHECK(ev.pushed);
  CHECK_FALSE(ev.pushed_onto_target);
  CHECK_FALSE(ev.pushed_off_target);
  CHECK(reward_step(ev) == -0.5);
}

TEST_CASE("score_episode identities") {
  const Level level = parse_level("#######\n#@$  .#\n#######\n");
  const auto plan = solve_bfs(level);
  REQUIRE(plan);
  const auto trace = reward_trace(level, *plan);
  const double r_best = std::accumulate(trace.begin(), trace.end(), 0.0);
  CHECK(score_episode(trace, r_best) == 100.0);
  CHECK(score_episode({}, r_best) == 100.0 - r_best);
  // idle oracle: r_best by the unpruned oracle's plan length (-0.5 per move, +55 at the end)
  const auto len = oracle::unpruned_bfs_length(level, 50);
  REQUIRE(len);
  CHECK(r_best == -0.5 * (*len - 1) + 54.5);
}

TEST_CASE("score_episode takes the best prefix when a box is pushed on then off") {
  State s = state_of("#######\n#@$. .#\n#  $  #\n#######\n");
  std::vector<double> trace;
  for (Action a : {Action::Right, Action::Right, Action::Right}) {
    auto [n, ev] = step(s, a);
    trace.push_back(reward_step(ev));
    s = n;
  }
  CHECK(trace == std::vector<double>{4.5, -5.5, 4.5});
  const double r_best = 40.0;
  CHECK(score_episode(trace, r_best) == oracle::brute_force_best_prefix(trace) - r_best + 100.0);
  CHECK(score_episode(trace, r_best) == 4.5 - r_best + 100.0);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  const double values[] = {4.5, -5.5, 54.5, -0.5};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> t(rng() % 30);
    for (auto& v : t) v = values[pick(rng)];
    CHECK(score_episode(t, 10.0) == oracle::brute_force_best_prefix(t) - 10.0 + 100.0);
  }
}

TEST_CASE("score_episode never decreases when a positive step is appended") {
  std::mt19937 rng(11);
  const double values[] = {4.5, -5.5, -0.5};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> t(rng() % 40);
    for (auto& v : t) v = values[rng() % 3];
    const double before = score_episode(t, 20.0);
    t.push_back(4.5);
    CHECK(score_episode(t, 20.0) >= before);
  }
}

TEST_CASE("solver basics") {
  SUBCASE("already solved") {
    const auto plan = solve_bfs(parse_level("####\n#@*#\n####\n"));
    REQUIRE(plan);
    CHECK(plan->empty());
  }
  SUBCASE("corridor of three pushes matches the unpruned oracle") {
    const Level level = parse_level("#######\n#@$  .#\n#######\n");
    const auto plan = solve_bfs(level);
    REQUIRE(plan);
    CHECK(plan->size() == 3);
    CHECK(oracle::unpruned_bfs_length(level, 50) == 3);
  }
  SUBCASE("box in a non-target corner has no plan") {
    const Level level = parse_level("######\n#$   #\n#  @.#\n######\n");
    CHECK_FALSE(solve_bfs(level));
  }
  SUBCASE("plan respects the step budget") {
    const Level level = parse_level("##########\n#@$     .#\n##########\n");
    CHECK(solve_bfs(level, 6)->size() == 6);
    CHECK_FALSE(solve_bfs(level, 5));
  }
}

TEST_CASE("deadlock examples") {
  CHECK(is_deadlock(state_of("######\n#$   #\n#  @.#\n######\n")));
  CHECK_FALSE(is_deadlock(state_of("######\n#*   #\n#  @ #\n######\n")));
  // box against a closed top wall run that holds no target
  const std::string run = "#######\n#  $  #\n#     #\n#.  @ #\n#######\n";
  CHECK(is_deadlock(state_of(run)));
  CHECK_FALSE(oracle::unpruned_bfs_length(parse_level(run), 60));
  // the same run with a gap in the wall is not flagged
  CHECK_FALSE(is_deadlock(state_of("### ###\n#  $  #\n#     #\n#.  @ #\n#######\n")));
  // 2x2 freeze of two boxes against a wall
  CHECK(is_deadlock(state_of("#######\n#  $$ #\n#  .. #\n#   @ #\n#######\n")));
}

TEST_CASE("is_deadlock soundness over every placement in a small room") {
  // every box placement (1 and 2 boxes) in a 4x4 interior, targets fixed
  Level base = parse_level("######\n#@$  #\n#    #\n#    #\n#   .#\n######\n");
  std::vector<Coord> floor;
  for (int i = 0; i < base.grid.size(); ++i) {
    if (base.grid.passable(base.grid.coord(i))) floor.push_back(base.grid.coord(i));
  }
  int flagged = 0;
  for (Coord b : floor) {
    for (Coord p : floor) {
      if (p == b) continue;
      Level l = base;
      l.boxes = {b};
      l.player = p;
      if (!is_deadlock(l, l.boxes)) continue;
      ++flagged;
      CHECK_FALSE(oracle::unpruned_bfs_length(l, 200));
    }
  }
  Level two = parse_level("######\n#@$ .#\n# $  #\n#    #\n#   .#\n######\n");
  for (std::size_t i = 0; i < floor.size(); ++i) {
    for (std::size_t j = i + 1; j < floor.size(); ++j) {
      for (Coord p : {Coord{2, 2}, Coord{3, 1}}) {
        if (p == floor[i] || p == floor[j]) continue;
        Level l = two;
        l.boxes = {floor[i], floor[j]};
        std::sort(l.boxes.begin(), l.boxes.end());
        l.player = p;
        if (!is_deadlock(l, l.boxes)) continue;
        ++flagged;
        CHECK_FALSE(oracle::unpruned_bfs_length(l, 200));
      }
    }
  }
  CHECK(flagged > 0);
}

TEST_CASE("generated levels") {
  SUBCASE("tier 1 has one box and is solvable") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Level l = generate_level(1, seed);
      CHECK(l.boxes.size() == 1);
      CHECK(l.grid.width() == tier_table()[0].grid_size);
      const auto plan = solve_bfs(l);
      REQUIRE(plan);
      CHECK(static_cast<int>(plan->size()) == l.optimal_steps);
      CHECK(l.optimal_steps <= 50);
    }
  }
  SUBCASE("same tier and seed give the same level") {
    CHECK(generate_level(3, 99) == generate_level(3, 99));
  }
  SUBCASE("tier table is monotone") {
    const auto& t = tier_table();
    int total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      total += t[i].corpus_count;
      if (i == 0) continue;
      CHECK(t[i].grid_size >= t[i - 1].grid_size);
      CHECK(t[i].boxes >= t[i - 1].boxes);
      CHECK(t[i].min_optimal >= t[i - 1].min_optimal);
    }
    CHECK(total == 182);
  }
}

TEST_CASE("tier 8 levels take longer than tier 1 levels on average") {
  double t1 = 0, t8 = 0;
  const int samples = 50;
  for (int i = 0; i < samples; ++i) {
    t1 += generate_level(1, 1000 + i).optimal_steps;
    t8 += generate_level(8, 1000 + i).optimal_steps;
  }
  CHECK(t8 / samples > t1 / samples);
}

TEST_CASE("level text round trip keeps the header") {
  const Level l = generate_level(2, 5);
  const Level back = parse_level(format_level(l), l.id);
  CHECK(back == l);
  CHECK_THROWS_AS(parse_level("#####\n#@$X#\n#####\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_level("#####\n#@$$.#\n#####\n"), std::invalid_argument);
}

TEST_CASE("render") {
  const State s = state_of("#####\n#@  #\n# $ #\n#  .#\n#####\n");
  const auto a = render(s);
  CHECK(a.width() == 5 * kTileSize);
  CHECK(a.height() == 5 * kTileSize);
  CHECK(a.to_ppm() == render(s).to_ppm());

  auto [moved, ev] = step(s, Action::Right);
  REQUIRE(ev.moved);
  const State rebuilt = state_of("#####\n# @ #\n# $ #\n#  .#\n#####\n");
  CHECK(render(moved).to_ppm() == render(rebuilt).to_ppm());
  CHECK(render(moved).to_ppm() != a.to_ppm());
}

TEST_CASE("box count is conserved and cells never doubly occupied") {
  const Level l = generate_level(5, 3);
  State s = initial_state(std::make_shared<const Level>(l));
  std::mt19937 rng(3);
  for (int i = 0; i < 500 && !s.done; ++i) {
    auto [n, ev] = step(s, kActions[rng() % 4]);
    CHECK(n.boxes.size() == l.boxes.size());
    CHECK(std::adjacent_find(n.boxes.begin(), n.boxes.end()) == n.boxes.end());
    CHECK_FALSE(n.has_box(n.player));
    for (Coord b : n.boxes) CHECK(l.grid.passable(b));
    s = n;
  }
}
