#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "magebench/sokoban/sokoban.hpp"

namespace mage::sokoban {

// Standard Sokoban notation ('#', ' ', '.', '$', '*', '@', '+') preceded by
// a header line "; tier=<k> optimal=<n> rbest=<r>". Throws
// std::invalid_argument on malformed input.
Level parse_level(std::string_view text, std::string id = {});
std::string format_level(const Level& level);
std::string format_grid(const Level& level, std::span<const Coord> boxes, Coord player);

Level load_level(const std::filesystem::path& path);
void save_level(const Level& level, const std::filesystem::path& path);

struct ManifestEntry {
  std::string id;
  std::string file;
  int tier = 0;
  int optimal_steps = 0;
  double r_best = 0.0;
};

struct Manifest {
  std::uint64_t seed = 0;
  std::vector<ManifestEntry> levels;
};

std::string format_manifest(const Manifest& manifest);
Manifest parse_manifest(std::string_view text);

// Loads every level listed in <dir>/manifest.json, in manifest order.
std::vector<Level> load_corpus(const std::filesystem::path& dir);

}  // namespace mage::sokoban
