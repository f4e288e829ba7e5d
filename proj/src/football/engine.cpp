#include "magebench/football/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "magebench/common/seed.hpp"
#include "magebench/football/reward.hpp"

namespace mage::football {

namespace {

constexpr std::array<std::string_view, kActionCount> kActionNames = {
    "action_idle",          "action_left",          "action_top_left",
    "action_top",           "action_top_right",     "action_right",
    "action_bottom_right",  "action_bottom",        "action_bottom_left",
    "action_long_pass",     "action_high_pass",     "action_short_pass",
    "action_shot",          "action_sprint",        "action_release_sprint",
    "action_dribble",       "action_release_dribble", "action_release_direction",
};

Vec2 clamp_to_field(Vec2 p, const PhysicsConfig& phys) {
  return {std::clamp(p.x, -phys.half_length, phys.half_length),
          std::clamp(p.y, -phys.half_width, phys.half_width)};
}

Vec2 toward(Vec2 from, Vec2 to, double speed) {
  const Vec2 d = to - from;
  const double n = d.norm();
  if (n <= speed) return d;
  return d * (speed / n);
}

double jitter(std::uint64_t seed, int player, int frame, std::uint64_t salt) {
  const auto h = derive_seed({seed, static_cast<std::uint64_t>(player),
                              static_cast<std::uint64_t>(frame / 40), salt});
  return unit_from_hash(h) - 0.5;
}

int nearest_player(const FootballState& s, Vec2 p, Team team, int exclude_a = -1, int exclude_b = -1,
                   double* out_distance = nullptr) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kPlayerCount; ++i) {
    if (team_of(i) != team || i == exclude_a || i == exclude_b) continue;
    const double d = distance(s.players[i].pos, p);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  if (out_distance) *out_distance = best_d;
  return best;
}

void launch(FootballState& s, Flight kind, Vec2 target, double speed, int receiver) {
  Ball& b = s.ball;
  b.passer = *b.holder;
  b.holder.reset();
  b.flight = kind;
  b.receiver = receiver;
  b.target = target;
  b.vel = (target - b.pos).normalized() * speed;
  b.flight_frames = 0;
  b.planned_frames = std::max(1, static_cast<int>(std::ceil(distance(target, b.pos) / speed)));
  if (receiver >= 0) s.controlled = receiver;
}

}  // namespace

std::string_view action_name(ActionId a) { return kActionNames[static_cast<std::size_t>(a)]; }

std::optional<ActionId> action_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kActionNames.size(); ++i) {
    const auto n = kActionNames[i];
    if (n.size() == name.size() &&
        std::equal(n.begin(), n.end(), name.begin(), [](char x, char y) {
          return std::tolower(static_cast<unsigned char>(x)) ==
                 std::tolower(static_cast<unsigned char>(y));
        })) {
      return static_cast<ActionId>(i);
    }
  }
  return std::nullopt;
}

bool is_direction(ActionId a) { return a >= ActionId::Left && a <= ActionId::BottomLeft; }

Vec2 direction_vector(ActionId a) {
  constexpr double d = 0.70710678118654752440;
  switch (a) {
    case ActionId::Left: return {-1, 0};
    case ActionId::TopLeft: return {-d, -d};
    case ActionId::Top: return {0, -1};
    case ActionId::TopRight: return {d, -d};
    case ActionId::Right: return {1, 0};
    case ActionId::BottomRight: return {d, d};
    case ActionId::Bottom: return {0, 1};
    case ActionId::BottomLeft: return {-d, d};
    default: return {};
  }
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::None: return "none";
    case Termination::Scored: return "scored";
    case Termination::Stolen: return "stolen";
    case Termination::OutOfBounds: return "out_of_bounds";
    case Termination::Saved: return "saved";
    case Termination::Horizon: return "horizon";
  }
  return "?";
}

double player_speed(const Player& p, const PhysicsConfig& physics) {
  double s = physics.base_speed;
  if (p.sprint) s *= physics.sprint_factor;
  if (p.dribble) s *= physics.dribble_factor;
  return s;
}

bool agent_in_control(const FootballState& state) {
  return !state.terminated() && state.own_ball() && *state.ball.holder == state.controlled;
}

int pick_receiver(const FootballState& state, Flight kind, const PhysicsConfig& physics) {
  const int holder = state.controlled;
  const Player& me = state.players[holder];
  const Vec2 dir = me.dir.norm() > 0.0 ? me.dir : Vec2{1.0, 0.0};
  int best = -1;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int j = 1; j < kTeamSize; ++j) {
    if (j == holder) continue;
    const Vec2 v = state.players[j].pos - me.pos;
    const double d = v.norm();
    if (d <= 0.0) continue;
    double score = v.dot(dir) / d;
    if (kind == Flight::ShortPass && d > physics.short_pass_range) score -= 2.0 * (d - physics.short_pass_range);
    if (kind == Flight::LongPass && d < physics.short_pass_range) score -= 2.0 * (physics.short_pass_range - d);
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

std::array<Vec2, kPlayerCount> HeuristicBots::velocities(const FootballState& s,
                                                         const PhysicsConfig& phys) const {
  std::array<Vec2, kPlayerCount> vel{};
  const Ball& ball = s.ball;
  const Vec2 focus = ball.holder ? s.players[*ball.holder].pos : (ball.in_flight() ? ball.target : ball.pos);

  // opponents
  vel[kTheirKeeper] = toward(s.players[kTheirKeeper].pos,
                             {phys.half_length - 0.02,
                              std::clamp(ball.pos.y, -phys.goal_half_width * 1.1, phys.goal_half_width * 1.1)},
                             phys.keeper_speed);
  int press_a = -1, press_b = -1;
  {
    double best_a = std::numeric_limits<double>::infinity(), best_b = best_a;
    for (int i = kTheirKeeper + 1; i < kPlayerCount; ++i) {
      const double d = distance(s.players[i].pos, focus);
      if (d < best_a) {
        best_b = best_a;
        press_b = press_a;
        best_a = d;
        press_a = i;
      } else if (d < best_b) {
        best_b = d;
        press_b = i;
      }
    }
  }
  Vec2 chase = focus;
  if (ball.holder) chase = focus + s.players[*ball.holder].vel * 4.0;
  for (int i = kTheirKeeper + 1; i < kPlayerCount; ++i) {
    const Player& p = s.players[i];
    if (i == press_a || i == press_b) {
      vel[i] = toward(p.pos, chase, phys.opponent_speed);
      continue;
    }
    Vec2 anchor{0.5 * p.home.x + 0.5 * (ball.pos.x + 0.2), 0.8 * p.home.y + 0.2 * ball.pos.y};
    anchor.x += 0.05 * jitter(s.seed, i, s.frame, 1);
    anchor.y += 0.05 * jitter(s.seed, i, s.frame, 2);
    anchor.x = std::clamp(anchor.x, -0.9, 0.95);
    vel[i] = toward(p.pos, anchor, 0.7 * phys.opponent_speed);
  }

  // our side
  double home_x = 0.0;
  for (int i = 1; i < kTeamSize; ++i) home_x += s.players[i].home.x;
  home_x /= (kTeamSize - 1);
  for (int i = 1; i < kTeamSize; ++i) {
    const Player& p = s.players[i];
    if (ball.in_flight() && i == ball.receiver) {
      vel[i] = toward(p.pos, ball.target, phys.base_speed);
      continue;
    }
    Vec2 anchor{p.home.x + 0.6 * (ball.pos.x - home_x) + 0.05, p.home.y};
    anchor.x += 0.06 * jitter(s.seed, i, s.frame, 3);
    anchor.y += 0.06 * jitter(s.seed, i, s.frame, 4);
    anchor.x = std::clamp(anchor.x, -0.95, 0.9);
    vel[i] = toward(p.pos, anchor, phys.teammate_speed_factor * phys.base_speed);
  }
  vel[kOurKeeper] = toward(s.players[kOurKeeper].pos, s.players[kOurKeeper].home, phys.base_speed * 0.5);
  return vel;
}

const BotPolicy& default_bots() {
  static const HeuristicBots bots;
  return bots;
}

StepResult step(const FootballState& state, ActionId action, const BotPolicy& bots,
                const SimConfig& config) {
  if (state.terminated()) throw std::logic_error("football step: episode already terminated");
  const PhysicsConfig& phys = config.physics;
  StepResult out{state, {}};
  FootballState& next = out.state;
  FrameEvents& ev = out.events;

  const bool steering = agent_in_control(state);
  if (steering) {
    Player& me = next.players[state.controlled];
    if (is_direction(action)) me.dir = direction_vector(action);
    switch (action) {
      case ActionId::ReleaseDirection: me.dir = {}; break;
      case ActionId::Sprint: me.sprint = true; break;
      case ActionId::ReleaseSprint: me.sprint = false; break;
      case ActionId::Dribble: me.dribble = true; break;
      case ActionId::ReleaseDribble: me.dribble = false; break;
      case ActionId::ShortPass:
      case ActionId::LongPass:
      case ActionId::HighPass: {
        const Flight kind = action == ActionId::ShortPass ? Flight::ShortPass
                          : action == ActionId::LongPass  ? Flight::LongPass
                                                          : Flight::HighPass;
        const double speed = kind == Flight::ShortPass ? phys.short_pass_speed
                           : kind == Flight::LongPass  ? phys.long_pass_speed
                                                       : phys.high_pass_speed;
        const int r = pick_receiver(next, kind, phys);
        if (r >= 0) {
          const Player& mate = next.players[r];
          const double lead = distance(mate.pos, next.ball.pos) / speed;
          const Vec2 target = clamp_to_field(mate.pos + mate.vel * lead, phys);
          launch(next, kind, target, speed, r);
        }
        break;
      }
      case ActionId::Shot: {
        const auto opponents = opponent_positions(state);
        const ShotChoice choice = best_shot(me.pos, opponents, phys);
        ev.shot_taken = true;
        ev.s_shot = choice.clearance;
        launch(next, Flight::Shot, shot_targets(phys)[choice.target_index], phys.shot_speed, -1);
        break;
      }
      default: break;
    }
  }

  const auto bot_vel = bots.velocities(next, phys);
  for (int i = 0; i < kPlayerCount; ++i) {
    Player& p = next.players[i];
    if (steering && i == state.controlled) {
      p.vel = p.dir * player_speed(p, phys);
    } else {
      p.vel = bot_vel[i];
    }
    p.pos = clamp_to_field(p.pos + p.vel, phys);
  }

  Ball& ball = next.ball;
  if (ball.holder) {
    ball.pos = next.players[*ball.holder].pos;
    ball.vel = next.players[*ball.holder].vel;
  } else if (ball.in_flight()) {
    ball.pos += ball.vel;
    ++ball.flight_frames;
    const bool is_shot = ball.flight == Flight::Shot;
    auto end_flight = [&](Termination t) {
      ball.flight = Flight::None;
      ball.vel = {};
      next.termination = t;
      if (t != Termination::Scored) ev.stole = true;
    };
    if (ball.pos.x >= phys.half_length) {
      end_flight(std::abs(ball.pos.y) <= phys.goal_half_width ? Termination::Scored
                                                              : Termination::OutOfBounds);
      if (next.termination == Termination::Scored) ev.scored = true;
    } else if (std::abs(ball.pos.y) > phys.half_width || ball.pos.x < -phys.half_length) {
      end_flight(Termination::OutOfBounds);
    } else if (is_shot && distance(ball.pos, next.players[kTheirKeeper].pos) < phys.keeper_reach) {
      end_flight(Termination::Saved);
      ball.holder = kTheirKeeper;
    } else {
      const bool exposed = ball.flight != Flight::HighPass ||
                           ball.flight_frames >= (1.0 - phys.high_pass_exposed_fraction) * ball.planned_frames;
      double opp_d = 0.0;
      const int opp = nearest_player(next, ball.pos, Team::Opponent, -1, -1, &opp_d);
      double mate_d = std::numeric_limits<double>::infinity();
      int mate = -1;
      if (!is_shot) {
        const int skip = ball.flight_frames <= 5 ? ball.passer : -1;
        mate = nearest_player(next, ball.pos, Team::Ours, skip, kOurKeeper, &mate_d);
      }
      const bool mate_in_reach = mate >= 0 && mate_d < phys.reception_radius;
      if (exposed && opp_d < phys.intercept_radius && !(mate_in_reach && mate_d <= opp_d)) {
        end_flight(Termination::Stolen);
        ball.holder = opp;
      } else if (mate_in_reach) {
        ball.flight = Flight::None;
        ball.holder = mate;
        ball.pos = next.players[mate].pos;
        ball.vel = next.players[mate].vel;
        next.controlled = mate;
        next.players[mate].dir = {};
        ev.pass_received = true;
        ev.receiver = mate;
        const auto opponents = opponent_positions(next);
        ev.s_pass = s_pass(next.players[mate].pos, opponents, {phys.half_length, 0.0},
                           config.rewards.pass_beta, config.rewards.pass_epsilon);
      } else if (ball.flight_frames > ball.planned_frames + phys.loose_ball_frames) {
        end_flight(Termination::Stolen);
      }
    }
  }

  // steal from our holder (a fresh reception is already resolved above)
  if (!next.terminated() && next.own_ball() && !ev.pass_received) {
    const Player& holder = next.players[*ball.holder];
    const double radius = phys.possession_radius_for(holder.sprint, holder.dribble);
    double d = 0.0;
    const int opp = nearest_player(next, holder.pos, Team::Opponent, -1, -1, &d);
    if (d < radius) {
      next.termination = Termination::Stolen;
      ball.holder = opp;
      ev.stole = true;
    }
  }

  next.frame = state.frame + 1;
  if (state.own_ball()) next.anchor = {state.frame, state.ball.pos.x, passed_count(state)};
  if (!next.terminated() && next.frame >= config.rewards.horizon) {
    next.termination = Termination::Horizon;
    ev.horizon = true;
  }
  return out;
}

}  // namespace mage::football
