#include "magebench/sokoban/level_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "magebench/common/assets.hpp"

namespace mage::sokoban {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

void parse_header(std::string_view line, Level& level) {
  std::istringstream in{std::string(line.substr(1))};
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    try {
      if (key == "tier") level.difficulty = std::stoi(val);
      else if (key == "optimal") level.optimal_steps = std::stoi(val);
      else if (key == "rbest") level.r_best = std::stod(val);
      else if (key == "id" && level.id.empty()) level.id = val;
    } catch (const std::exception&) {
      throw std::invalid_argument("level header: bad value for " + key);
    }
  }
}

}  // namespace

Level parse_level(std::string_view text, std::string id) {
  Level level;
  level.id = std::move(id);
  std::vector<std::string> rows;
  for (auto& line : split_lines(text)) {
    if (!line.empty() && line[0] == ';') {
      parse_header(line, level);
      continue;
    }
    if (rows.empty() && line.find_first_not_of(' ') == std::string::npos) continue;
    rows.push_back(line);
  }
  while (!rows.empty() && rows.back().find_first_not_of(' ') == std::string::npos) rows.pop_back();
  if (rows.empty()) throw std::invalid_argument("level: empty grid");

  std::size_t width = 0;
  for (auto& r : rows) width = std::max(width, r.size());
  level.grid = Grid(static_cast<int>(width), static_cast<int>(rows.size()), Cell::Wall);
  bool have_player = false;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      const Coord at{r, c};
      switch (rows[r][c]) {
        case '#': level.grid.set(at, Cell::Wall); break;
        case ' ': case '-': case '_': level.grid.set(at, Cell::Floor); break;
        case '.': level.grid.set(at, Cell::Target); break;
        case '$': level.grid.set(at, Cell::Floor); level.boxes.push_back(at); break;
        case '*': level.grid.set(at, Cell::Target); level.boxes.push_back(at); break;
        case '@': case '+':
          if (have_player) throw std::invalid_argument("level: more than one player");
          level.grid.set(at, rows[r][c] == '+' ? Cell::Target : Cell::Floor);
          level.player = at;
          have_player = true;
          break;
        default:
          throw std::invalid_argument(fmt::format("level: unknown cell character '{}'", rows[r][c]));
      }
    }
  }
  if (!have_player) throw std::invalid_argument("level: no player");
  for (int i = 0; i < level.grid.size(); ++i) {
    if (level.grid.at(level.grid.coord(i)) == Cell::Target) level.targets.push_back(level.grid.coord(i));
  }
  std::sort(level.boxes.begin(), level.boxes.end());
  level.validate();
  return level;
}

std::string format_grid(const Level& level, std::span<const Coord> boxes, Coord player) {
  std::string out;
  const Grid& g = level.grid;
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      const Coord at{r, c};
      const bool box = std::find(boxes.begin(), boxes.end(), at) != boxes.end();
      const bool target = g.at(at) == Cell::Target;
      char ch = ' ';
      if (g.at(at) == Cell::Wall) ch = '#';
      else if (player == at) ch = target ? '+' : '@';
      else if (box) ch = target ? '*' : '$';
      else if (target) ch = '.';
      out += ch;
    }
    out += '\n';
  }
  return out;
}

std::string format_level(const Level& level) {
  std::string out = fmt::format("; tier={} optimal={} rbest={}\n", level.difficulty,
                                level.optimal_steps, level.r_best);
  out += format_grid(level, level.boxes, level.player);
  return out;
}

Level load_level(const std::filesystem::path& path) {
  return parse_level(read_text_file(path), path.stem().string());
}

void save_level(const Level& level, const std::filesystem::path& path) {
  write_text_file(path, format_level(level));
}

std::string format_manifest(const Manifest& manifest) {
  nlohmann::ordered_json j;
  j["environment"] = "sokoban";
  j["seed"] = manifest.seed;
  j["count"] = manifest.levels.size();
  nlohmann::ordered_json tiers = nlohmann::ordered_json::object();
  for (int t = 1; t <= 8; ++t) {
    tiers[std::to_string(t)] = std::count_if(manifest.levels.begin(), manifest.levels.end(),
                                             [t](const ManifestEntry& e) { return e.tier == t; });
  }
  j["tiers"] = tiers;
  auto& arr = j["levels"] = nlohmann::ordered_json::array();
  for (const auto& e : manifest.levels) {
    arr.push_back({{"id", e.id}, {"file", e.file}, {"tier", e.tier},
                   {"optimal", e.optimal_steps}, {"rbest", e.r_best}});
  }
  return j.dump(2) + "\n";
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  try {
    const auto j = nlohmann::json::parse(text);
    m.seed = j.value("seed", std::uint64_t{0});
    for (const auto& e : j.at("levels")) {
      m.levels.push_back({e.at("id").get<std::string>(), e.at("file").get<std::string>(),
                          e.at("tier").get<int>(), e.at("optimal").get<int>(),
                          e.at("rbest").get<double>()});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("sokoban manifest: ") + ex.what());
  }
  return m;
}

std::vector<Level> load_corpus(const std::filesystem::path& dir) {
  const Manifest m = parse_manifest(read_text_file(dir / "manifest.json"));
  std::vector<Level> levels;
  levels.reserve(m.levels.size());
  for (const auto& e : m.levels) {
    Level l = load_level(dir / e.file);
    l.id = e.id;
    levels.push_back(std::move(l));
  }
  return levels;
}

}  // namespace mage::sokoban
