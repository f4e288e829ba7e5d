#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mage::football {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
  }
  bool operator==(const Vec2&) const = default;
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Distance from p to the closed segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

enum class Team : std::uint8_t { Ours, Opponent };

inline constexpr int kTeamSize = 11;
inline constexpr int kPlayerCount = 22;
// Players 0..10 are ours (0 = goalkeeper), 11..21 the opponents (11 = goalkeeper).
inline constexpr int kOurKeeper = 0;
inline constexpr int kTheirKeeper = 11;
inline constexpr Team team_of(int player) { return player < kTeamSize ? Team::Ours : Team::Opponent; }

enum class ActionId : std::uint8_t {
  Idle,
  Left,
  TopLeft,
  Top,
  TopRight,
  Right,
  BottomRight,
  Bottom,
  BottomLeft,
  LongPass,
  HighPass,
  ShortPass,
  Shot,
  Sprint,
  ReleaseSprint,
  Dribble,
  ReleaseDribble,
  ReleaseDirection,
};

inline constexpr int kActionCount = 18;

std::string_view action_name(ActionId a);
std::optional<ActionId> action_from_name(std::string_view name);
bool is_direction(ActionId a);
// Unit vector for a direction action (screen convention: "top" is -y).
Vec2 direction_vector(ActionId a);

// Field coordinates: x in [-1, 1] (we attack +x), y in [-0.42, 0.42].
struct PhysicsConfig {
  double half_length = 1.0;
  double half_width = 0.42;
  double goal_half_width = 0.044;

  double base_speed = 0.005;
  double sprint_factor = 1.4;
  double dribble_factor = 0.7;
  double possession_radius = 0.012;
  double sprint_radius_factor = 1.3;
  double dribble_radius_factor = 0.7;

  double opponent_speed = 0.00425;
  double teammate_speed_factor = 0.6;
  double keeper_speed = 0.002;
  double keeper_reach = 0.02;

  double short_pass_speed = 0.0125;
  double long_pass_speed = 0.0175;
  double high_pass_speed = 0.015;
  double shot_speed = 0.025;
  double short_pass_range = 0.35;
  double reception_radius = 0.02;
  double intercept_radius = 0.012;
  // High passes can only be cut out over this final fraction of the flight.
  double high_pass_exposed_fraction = 0.25;
  int loose_ball_frames = 30;

  double possession_radius_for(bool sprint, bool dribble) const {
    double r = possession_radius;
    if (sprint) r *= sprint_radius_factor;
    if (dribble) r *= dribble_radius_factor;
    return r;
  }
};

// All tunable constants of the dense football reward.
struct RewardWeights {
  double move = 16.0;        // advancement
  double opponents = 20.0;   // opponents passed
  double scored = 40.0;
  double interception = 20.0;
  double pass = 400.0;
  double shot = 100.0;
  int horizon = 400;         // frames
  double pass_beta = 10.0;
  double pass_epsilon = 1.0;
};

struct Player {
  Vec2 pos;
  Vec2 vel;
  Vec2 home;    // formation anchor used by the bots
  Vec2 dir;     // sticky movement intent (unit or zero)
  bool sprint = false;
  bool dribble = false;
  bool operator==(const Player&) const = default;
};

enum class Flight : std::uint8_t { None, ShortPass, LongPass, HighPass, Shot };

struct Ball {
  Vec2 pos;
  Vec2 vel;
  std::optional<int> holder;
  Flight flight = Flight::None;
  int passer = -1;
  int receiver = -1;
  Vec2 target;
  int flight_frames = 0;
  int planned_frames = 0;
  bool in_flight() const { return flight != Flight::None; }
  bool operator==(const Ball&) const = default;
};

enum class Termination : std::uint8_t { None, Scored, Stolen, OutOfBounds, Saved, Horizon };
std::string_view termination_name(Termination t);

// The frame t' that S_move / S_oppo measure against: the last frame our team
// held the ball (the launch frame while a pass is in the air).
struct OwnershipAnchor {
  int frame = 0;
  double ball_x = 0.0;
  int passed = 0;
  bool operator==(const OwnershipAnchor&) const = default;
};

struct FootballState {
  std::array<Player, kPlayerCount> players{};
  Ball ball;
  int controlled = 1;
  int frame = 0;
  OwnershipAnchor anchor;
  Termination termination = Termination::None;
  std::uint64_t seed = 0;

  bool terminated() const { return termination != Termination::None; }
  bool own_ball() const { return ball.holder.has_value() && team_of(*ball.holder) == Team::Ours; }
  bool operator==(const FootballState&) const = default;
};

// Number of opponents strictly behind the ball (p_x < ball_x).
int passed_count(const FootballState& s);

struct FrameEvents {
  bool scored = false;
  bool stole = false;          // interception, out of bounds, keeper save
  bool horizon = false;        // reached t = T still in possession
  bool pass_received = false;
  bool shot_taken = false;
  double s_pass = 0.0;         // valid when pass_received
  double s_shot = 0.0;         // valid when shot_taken
  int receiver = -1;
  bool operator==(const FrameEvents&) const = default;
};

}  // namespace mage::football
