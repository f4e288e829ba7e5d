#include "magebench/football/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>
#include <limits>
#include <random>
#include <stdexcept>

#include "magebench/common/assets.hpp"
#include "magebench/common/seed.hpp"
#include "magebench/football/io.hpp"

namespace mage::football {

namespace {

constexpr double kHolderClearance = 0.06;
constexpr double kMateClearance = 0.10;

// Match and time for each real-world scene, R1..R9 x 4.
constexpr std::array<std::array<std::string_view, 4>, kRegionCount> kRealWorldSources = {{
    {"Brazil vs. Belgium | 2018 FIFA World Cup; 69:32", "Germany vs. Mexico | 2018 FIFA World Cup; 82:11",
     "Brazil vs. Germany | 2014 FIFA World Cup; 12:19", "Brazil vs. Germany | 2014 FIFA World Cup; 26:55"},
    {"France vs. Croatia | 2018 FIFA World Cup Final; 46:53", "Belgium vs. Japan | 2018 FIFA World Cup; 4:01",
     "Germany vs. Mexico | 2018 FIFA World Cup; 53:08", "France vs. Argentina | 2018 FIFA World Cup; 29:28"},
    {"Brazil vs. Belgium | 2018 FIFA World Cup; 14:13", "Brazil vs. Belgium | 2018 FIFA World Cup; 24:36",
     "Germany vs. Mexico | 2018 FIFA World Cup; 13:11", "France vs. Argentina | 2018 FIFA World Cup; 47:25"},
    {"Germany vs. Mexico | 2018 FIFA World Cup; 62:58", "France vs. Argentina | 2018 FIFA World Cup; 18:06",
     "Portugal vs. Spain | 2018 FIFA World Cup; 82:02", "Brazil vs. Germany | 2014 FIFA World Cup; 26:23"},
    {"Brazil vs. Belgium | 2018 FIFA World Cup; 6:22", "France vs. Argentina | 2018 FIFA World Cup; 42:08",
     "France vs. Argentina | 2018 FIFA World Cup; 64:47", "Portugal vs. Spain | 2018 FIFA World Cup; 31:49"},
    {"Belgium vs. Japan | 2018 FIFA World Cup; 8:02", "Portugal vs. Spain | 2018 FIFA World Cup; 62:08",
     "Brazil vs. Germany | 2014 FIFA World Cup; 40:46", "Netherlands vs. Brazil | 2010 FIFA World Cup; 16:55"},
    {"Germany vs. Mexico | 2018 FIFA World Cup; 39:49", "France vs. Argentina | 2018 FIFA World Cup; 00:52",
     "Portugal vs. Spain | 2018 FIFA World Cup; 21:25", "Portugal vs. Spain | 2018 FIFA World Cup; 64:22"},
    {"France vs. Croatia | 2018 FIFA World Cup Final; 0:18", "Brazil vs. Belgium | 2018 FIFA World Cup; 85:34",
     "France vs. Argentina | 2018 FIFA World Cup; 61:53", "Portugal vs. Spain | 2018 FIFA World Cup; 18:43"},
    {"Belgium vs. Japan | 2018 FIFA World Cup; 20:53", "Germany vs. Mexico | 2018 FIFA World Cup; 24:29",
     "Portugal vs. Spain | 2018 FIFA World Cup; 26:31", "Brazil vs. Germany | 2014 FIFA World Cup; 01:51"},
}};

constexpr std::array<double, 4> kLineY = {-0.27, -0.09, 0.09, 0.27};

using Placements = std::array<Vec2, kPlayerCount>;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

Vec2 clamp_inside(Vec2 p, const PhysicsConfig& phys, double margin = 0.01) {
  return {std::clamp(p.x, -phys.half_length + margin, phys.half_length - margin),
          std::clamp(p.y, -phys.half_width + margin, phys.half_width - margin)};
}

// 4-4-2 against 4-4-2, both blocks shifted toward the ball, then jittered.
// Returns the placements with the nearest outfield player moved onto `ball`.
Placements base_formation(Vec2 ball, Sampler& rng, double spread, int& holder) {
  const PhysicsConfig phys;
  Placements p{};
  p[kOurKeeper] = {-0.97, 0.0};
  p[kTheirKeeper] = {0.97, std::clamp(ball.y * 0.1, -0.03, 0.03)};
  const double ours_shift = 0.6 * ball.x;
  const double theirs_shift = 0.4 * ball.x;
  const std::array<double, 3> ours_x = {-0.65, -0.25, 0.15};
  const std::array<double, 3> theirs_x = {0.65, 0.30, -0.05};
  for (int k = 0; k < 10; ++k) {
    const int line = k < 4 ? 0 : (k < 8 ? 1 : 2);
    const double y = line == 2 ? (k == 8 ? -0.1 : 0.1) : kLineY[k % 4];
    p[1 + k] = {ours_x[line] + ours_shift + rng.uniform(-spread, spread),
                y + 0.3 * ball.y + rng.uniform(-spread, spread)};
    p[kTheirKeeper + 1 + k] = {theirs_x[line] + theirs_shift + rng.uniform(-spread, spread),
                               y + 0.4 * ball.y + rng.uniform(-spread, spread)};
  }
  for (auto& q : p) q = clamp_inside(q, phys);

  holder = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 1; i < kTeamSize; ++i) {
    const double d = distance(p[i], ball);
    if (d < best) {
      best = d;
      holder = i;
    }
  }
  p[holder] = ball;

  // nobody starts on top of the ball
  for (int i = 0; i < kPlayerCount; ++i) {
    if (i == holder) continue;
    const double need = team_of(i) == Team::Ours ? kMateClearance : kHolderClearance;
    Vec2 d = p[i] - ball;
    if (d.norm() >= need) continue;
    if (d.norm() < 1e-9) d = {team_of(i) == Team::Ours ? -1.0 : 1.0, 0.0};
    p[i] = clamp_inside(ball + d.normalized() * (need + rng.uniform(0.0, 0.04)), phys);
  }
  return p;
}

bool holder_safe(const Placements& p, int holder) {
  for (int i = 0; i < kPlayerCount; ++i) {
    if (i == holder) continue;
    const double need = team_of(i) == Team::Ours ? kMateClearance : kHolderClearance;
    if (distance(p[i], p[holder]) < need - 1e-9) return false;
  }
  return true;
}

Vec2 sample_in_region(int region, Sampler& rng) {
  const Rect r = region_bounds(region);
  constexpr double m = 0.03;
  return {rng.uniform(r.x0 + m, r.x1 - m), rng.uniform(r.y0 + m, r.y1 - m)};
}

// Drops an opponent into every open lane, close to the holder so one defender
// shadows a whole fan of lanes.
bool close_all_lanes(Placements& p, int holder, Sampler& rng) {
  const PhysicsConfig phys;
  std::array<bool, kPlayerCount> used{};
  for (int round = 0; round < kTeamSize; ++round) {
    const auto lanes = open_lanes(p, holder);
    if (lanes.empty()) return true;
    const int mate = lanes[static_cast<std::size_t>(rng.uniform(0.0, 1.0) * lanes.size()) % lanes.size()];
    const Vec2 u = (p[mate] - p[holder]).normalized();
    const Vec2 perp{-u.y, u.x};
    const double len = distance(p[mate], p[holder]);
    const double along = std::min(len * 0.5, rng.uniform(0.065, 0.09));
    const Vec2 spot = clamp_inside(p[holder] + u * along + perp * rng.uniform(-0.008, 0.008), phys);
    int blocker = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int j = kTheirKeeper + 1; j < kPlayerCount; ++j) {
      if (used[j]) continue;
      const double d = distance(p[j], spot);
      if (d < best) {
        best = d;
        blocker = j;
      }
    }
    if (blocker < 0) return false;
    used[blocker] = true;
    p[blocker] = spot;
  }
  return open_lanes(p, holder).empty();
}

// Clears the lane to the most advanced teammate by sliding defenders sideways.
bool open_one_lane(Placements& p, int holder, Sampler& rng) {
  const PhysicsConfig phys;
  if (!open_lanes(p, holder).empty()) return true;
  int mate = -1;
  double best_x = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < kTeamSize; ++i) {
    if (i == holder) continue;
    const double d = distance(p[i], p[holder]);
    if (d > 0.5) continue;
    if (p[i].x > best_x) {
      best_x = p[i].x;
      mate = i;
    }
  }
  if (mate < 0) return false;
  const Vec2 a = p[holder], b = p[mate];
  const Vec2 u = (b - a).normalized();
  const Vec2 perp{-u.y, u.x};
  for (int j = kTeamSize; j < kPlayerCount; ++j) {
    if (point_segment_distance(p[j], a, b) >= kLaneBuffer + 0.005) continue;
    const double side = (p[j] - a).dot(perp) >= 0.0 ? 1.0 : -1.0;
    const double along = std::clamp((p[j] - a).dot(u), 0.0, distance(a, b));
    p[j] = clamp_inside(a + u * along + perp * (side * (kLaneBuffer + rng.uniform(0.02, 0.05))), phys);
  }
  return lane_open(p, holder, mate);
}

Scenario make_generated(Category category, int region, std::uint64_t seed) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Sampler rng(derive_seed({seed, static_cast<std::uint64_t>(category), static_cast<std::uint64_t>(region),
                             static_cast<std::uint64_t>(attempt)}));
    const Vec2 ball = sample_in_region(region, rng);
    int holder = 1;
    Placements p = base_formation(ball, rng, 0.06, holder);
    const bool ok = category == Category::Personal ? close_all_lanes(p, holder, rng)
                                                   : open_one_lane(p, holder, rng);
    if (!ok || !holder_safe(p, holder)) continue;
    const auto lanes = open_lanes(p, holder);
    if (category == Category::Personal ? !lanes.empty() : lanes.empty()) continue;
    Scenario s;
    s.category = category;
    s.region = region;
    s.placements = p;
    s.holder = holder;
    s.seed = seed;
    s.source = "generated";
    s.provenance = "generated";
    return s;
  }
  throw std::runtime_error(fmt::format("scenario generation failed for {} R{}", category_name(category), region));
}

}  // namespace

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Personal: return "personal";
    case Category::Teamwork: return "teamwork";
    case Category::RealWorld: return "realworld";
  }
  return "?";
}

std::optional<Category> category_from_name(std::string_view name) {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "personal") return Category::Personal;
  if (lower == "teamwork") return Category::Teamwork;
  if (lower == "realworld" || lower == "real-world" || lower == "real_world") return Category::RealWorld;
  return std::nullopt;
}

Rect region_bounds(int region, const PhysicsConfig& phys) {
  if (region < 1 || region > kRegionCount) throw std::invalid_argument("region must be in 1..9");
  const int col = (region - 1) % 3;
  const int row = (region - 1) / 3;
  const double w = 2.0 * phys.half_length / 3.0;
  const double h = 2.0 * phys.half_width / 3.0;
  return {-phys.half_length + col * w, -phys.half_length + (col + 1) * w, -phys.half_width + row * h,
          -phys.half_width + (row + 1) * h};
}

int region_of(Vec2 p, const PhysicsConfig& phys) {
  const double w = 2.0 * phys.half_length / 3.0;
  const double h = 2.0 * phys.half_width / 3.0;
  const int col = std::clamp(static_cast<int>((p.x + phys.half_length) / w), 0, 2);
  const int row = std::clamp(static_cast<int>((p.y + phys.half_width) / h), 0, 2);
  return row * 3 + col + 1;
}

bool lane_open(const std::array<Vec2, kPlayerCount>& p, int holder, int mate, double buffer) {
  for (int j = kTeamSize; j < kPlayerCount; ++j) {
    if (point_segment_distance(p[j], p[holder], p[mate]) < buffer) return false;
  }
  return true;
}

std::vector<int> open_lanes(const std::array<Vec2, kPlayerCount>& p, int holder, double buffer) {
  std::vector<int> out;
  for (int i = 0; i < kTeamSize; ++i) {
    if (i != holder && lane_open(p, holder, i, buffer)) out.push_back(i);
  }
  return out;
}

Scenario synthesize_realworld(int region, int variant) {
  if (variant < 0 || variant >= kVariantsPerCell) throw std::invalid_argument("variant must be in 0..3");
  Sampler rng(derive_seed({0x5245414CULL, static_cast<std::uint64_t>(region), static_cast<std::uint64_t>(variant)}));
  const Vec2 ball = sample_in_region(region, rng);
  Scenario s;
  s.category = Category::RealWorld;
  s.region = region;
  s.placements = base_formation(ball, rng, 0.09, s.holder);
  s.id = fmt::format("realworld-R{}-{}", region, variant + 1);
  s.seed = static_cast<std::uint64_t>(variant);
  s.source = std::string(kRealWorldSources[region - 1][variant]);
  s.provenance = "reconstructed, not paper data";
  return s;
}

std::filesystem::path realworld_fixture_path(int region, int variant) {
  return asset_root() / "football" / "realworld" / fmt::format("R{}_{}.json", region, variant + 1);
}

Scenario load_realworld(int region, int variant) {
  Scenario s = load_scenario(realworld_fixture_path(region, variant));
  if (s.category != Category::RealWorld || s.region != region)
    throw std::runtime_error("real-world fixture does not match its file name");
  return s;
}

Scenario generate_scenario(Category category, int region, std::uint64_t seed) {
  if (region < 1 || region > kRegionCount) throw std::invalid_argument("region must be in 1..9");
  if (category == Category::RealWorld) return load_realworld(region, static_cast<int>(seed % kVariantsPerCell));
  Scenario s = make_generated(category, region, seed);
  s.id = fmt::format("{}-R{}-s{}", category_name(category), region, seed);
  return s;
}

std::vector<Scenario> generate_sweep(std::uint64_t seed) {
  std::vector<Scenario> out;
  out.reserve(kScenarioCount);
  for (Category c : {Category::Personal, Category::Teamwork, Category::RealWorld}) {
    for (int r = 1; r <= kRegionCount; ++r) {
      for (int v = 0; v < kVariantsPerCell; ++v) {
        const std::uint64_t s =
            c == Category::RealWorld ? static_cast<std::uint64_t>(v)
                                     : derive_seed({seed, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(v)});
        Scenario sc = generate_scenario(c, r, s);
        sc.id = fmt::format("{}-R{}-{}", category_name(c), r, v + 1);
        out.push_back(std::move(sc));
      }
    }
  }
  return out;
}

FootballState initial_state(const Scenario& scenario) {
  FootballState s;
  for (int i = 0; i < kPlayerCount; ++i) {
    s.players[i].pos = scenario.placements[i];
    s.players[i].home = scenario.placements[i];
  }
  s.ball.pos = scenario.placements[scenario.holder];
  s.ball.holder = scenario.holder;
  s.controlled = scenario.holder;
  s.seed = derive_seed({scenario.seed, hash_string(scenario.id)});
  s.anchor = {0, s.ball.pos.x, passed_count(s)};
  return s;
}

}  // namespace mage::football
