#include "magebench/harness/episode_result.hpp"

#include <algorithm>

namespace mage::harness {

std::vector<OutputRecord> EpisodeResult::outputs() const {
  std::vector<OutputRecord> out;
  out.reserve(decisions.size());
  for (const auto& d : decisions) out.push_back({d.parsed, d.actions});
  return out;
}

int EpisodeResult::unparsed() const {
  return static_cast<int>(std::count_if(decisions.begin(), decisions.end(), [](const Decision& d) { return !d.parsed; }));
}

nlohmann::ordered_json to_json(const EpisodeResult& r) {
  nlohmann::ordered_json j;
  j["env"] = r.env;
  j["mode"] = r.mode;
  j["level"] = r.level_id;
  j["repeat"] = r.repeat;
  j["seed"] = r.seed;
  j["score"] = r.score;
  j["termination"] = r.termination;
  j["agent_calls"] = r.agent_calls;
  j["unparsed"] = r.unparsed();
  j["errors"] = {{"kind", error_kind_name(r.errors.kind)},
                 {"ife", r.errors.ife},
                 {"unparsed_fraction", r.errors.unparsed_fraction},
                 {"mode_action_fraction", r.errors.mode_action_fraction}};
  j["rewards"] = r.rewards;
  auto decisions = nlohmann::ordered_json::array();
  for (const auto& d : r.decisions) {
    nlohmann::ordered_json dj;
    dj["step"] = d.step;
    dj["attempts"] = d.attempts;
    dj["parsed"] = d.parsed;
    dj["actions"] = d.actions;
    dj["output"] = d.output;
    decisions.push_back(std::move(dj));
  }
  j["decisions"] = std::move(decisions);
  j["extras"] = r.extras;
  return j;
}

EpisodeResult episode_from_json(const nlohmann::ordered_json& j) {
  EpisodeResult r;
  r.env = j.at("env").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.level_id = j.at("level").get<std::string>();
  r.repeat = j.at("repeat").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.score = j.at("score").get<double>();
  r.termination = j.value("termination", std::string{});
  r.agent_calls = j.value("agent_calls", 0);
  r.rewards = j.value("rewards", std::vector<double>{});
  for (const auto& dj : j.value("decisions", nlohmann::ordered_json::array())) {
    Decision d;
    d.step = dj.at("step").get<int>();
    d.attempts = dj.value("attempts", 1);
    d.parsed = dj.at("parsed").get<bool>();
    d.actions = dj.value("actions", std::vector<std::string>{});
    d.output = dj.value("output", std::string{});
    r.decisions.push_back(std::move(d));
  }
  if (!r.decisions.empty()) r.errors = classify_errors(r.outputs());
  if (j.contains("extras")) r.extras = j.at("extras");
  return r;
}

}  // namespace mage::harness
