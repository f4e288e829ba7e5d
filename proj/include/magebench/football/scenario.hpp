#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magebench/football/types.hpp"

namespace mage::football {

enum class Category : std::uint8_t { Personal, Teamwork, RealWorld };

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

inline constexpr int kRegionCount = 9;
inline constexpr int kVariantsPerCell = 4;
inline constexpr int kScenarioCount = 3 * kRegionCount * kVariantsPerCell;

struct Scenario {
  std::string id;
  Category category = Category::Personal;
  int region = 5;  // R1..R9, row-major from the top-left of the attacking view
  std::array<Vec2, kPlayerCount> placements{};
  int holder = 1;
  std::uint64_t seed = 0;
  std::string source;      // free text: "generated", or the match and time for real-world scenes
  std::string provenance;  // "generated" or "reconstructed, not paper data"
  bool operator==(const Scenario&) const = default;
};

struct Rect {
  double x0, x1, y0, y1;
  bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

// R1..R9: columns are thirds of x (own goal on the left), rows are thirds of
// y starting at the top touchline (y = -half_width).
Rect region_bounds(int region, const PhysicsConfig& physics = {});
int region_of(Vec2 p, const PhysicsConfig& physics = {});

inline constexpr double kLaneBuffer = 0.04;

// A lane is open when no opponent lies within `buffer` of the holder->mate segment.
bool lane_open(const std::array<Vec2, kPlayerCount>& placements, int holder, int mate,
               double buffer = kLaneBuffer);
std::vector<int> open_lanes(const std::array<Vec2, kPlayerCount>& placements, int holder,
                            double buffer = kLaneBuffer);

// Personal: no open lane from the holder. Teamwork: at least one open lane.
// RealWorld: loaded from the shipped fixture files (variant = seed % 4).
Scenario generate_scenario(Category category, int region, std::uint64_t seed);

// 3 categories x 9 regions x 4 variants, ids "{category}-R{r}-{v}".
std::vector<Scenario> generate_sweep(std::uint64_t seed);

// Placement synthesis used to author the real-world fixture files.
Scenario synthesize_realworld(int region, int variant);
std::filesystem::path realworld_fixture_path(int region, int variant);
Scenario load_realworld(int region, int variant);

FootballState initial_state(const Scenario& scenario);

}  // namespace mage::football
