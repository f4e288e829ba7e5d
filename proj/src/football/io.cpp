#include "magebench/football/io.hpp"

#include "json.hpp"
#include <stdexcept>

#include "magebench/common/assets.hpp"

namespace mage::football {

namespace {
using ojson = nlohmann::ordered_json;

ojson vec(Vec2 v) { return ojson::array({v.x, v.y}); }
}  // namespace

std::string format_scenario(const Scenario& s) {
  ojson j;
  j["id"] = s.id;
  j["category"] = category_name(s.category);
  j["region"] = s.region;
  j["holder"] = s.holder;
  j["seed"] = s.seed;
  j["source"] = s.source;
  j["provenance"] = s.provenance;
  j["ball"] = vec(s.placements[s.holder]);
  ojson players = ojson::array();
  for (int i = 0; i < kPlayerCount; ++i) {
    players.push_back({{"team", team_of(i) == Team::Ours ? "ours" : "opponent"},
                       {"index", i % kTeamSize},
                       {"x", s.placements[i].x},
                       {"y", s.placements[i].y}});
  }
  j["players"] = std::move(players);
  return j.dump(2) + "\n";
}

Scenario parse_scenario(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Scenario s;
  s.id = j.at("id").get<std::string>();
  const auto cat = category_from_name(j.at("category").get<std::string>());
  if (!cat) throw std::invalid_argument("scenario: unknown category");
  s.category = *cat;
  s.region = j.at("region").get<int>();
  if (s.region < 1 || s.region > kRegionCount) throw std::invalid_argument("scenario: region out of range");
  s.holder = j.at("holder").get<int>();
  s.seed = j.value("seed", std::uint64_t{0});
  s.source = j.value("source", std::string{});
  s.provenance = j.value("provenance", std::string{});
  const auto& players = j.at("players");
  if (players.size() != kPlayerCount) throw std::invalid_argument("scenario: expected 22 players");
  for (const auto& p : players) {
    const bool ours = p.at("team").get<std::string>() == "ours";
    const int idx = p.at("index").get<int>();
    if (idx < 0 || idx >= kTeamSize) throw std::invalid_argument("scenario: bad player index");
    s.placements[(ours ? 0 : kTeamSize) + idx] = {p.at("x").get<double>(), p.at("y").get<double>()};
  }
  if (s.holder < 1 || s.holder >= kTeamSize) throw std::invalid_argument("scenario: holder must be one of our outfield players");
  return s;
}

void save_scenario(const std::filesystem::path& path, const Scenario& s) {
  write_text_file(path, format_scenario(s));
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text_file(path)); }

std::string format_replay_frame(const StepResult& frame, ActionId action, bool agent_decision,
                                double reward) {
  const FootballState& s = frame.state;
  const FrameEvents& e = frame.events;
  ojson j;
  j["frame"] = s.frame;
  j["action"] = action_name(action);
  j["agent"] = agent_decision;
  j["ball"] = vec(s.ball.pos);
  j["holder"] = s.ball.holder ? ojson(*s.ball.holder) : ojson(nullptr);
  j["controlled"] = s.controlled;
  ojson players = ojson::array();
  for (const auto& p : s.players) players.push_back(vec(p.pos));
  j["players"] = std::move(players);
  ojson ev = ojson::array();
  if (e.scored) ev.push_back("scored");
  if (e.stole) ev.push_back("stole");
  if (e.horizon) ev.push_back("horizon");
  if (e.pass_received) ev.push_back("pass_received");
  if (e.shot_taken) ev.push_back("shot_taken");
  j["events"] = std::move(ev);
  j["termination"] = termination_name(s.termination);
  j["reward"] = reward;
  return j.dump();
}

}  // namespace mage::football
