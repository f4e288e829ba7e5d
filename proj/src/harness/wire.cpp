#include "magebench/harness/wire.hpp"

#include "magebench/common/base64.hpp"

namespace mage::harness {

namespace {

std::string encode_frame(const Raster& r) { return base64_encode(r.to_ppm()); }

}  // namespace

WireJson episode_start_message(const EpisodeInfo& info) {
  WireJson j;
  j["type"] = "episode_start";
  j["env"] = env_name(info.env);
  j["mode"] = mode_name(info.mode);
  j["prompts"] = {{"system", info.prompts.system_prompt},
                  {"task", info.prompts.task_prompt},
                  {"cot", info.prompts.cot_prompt},
                  {"io", info.prompts.io_prompt}};
  j["level"] = info.level_id;
  j["vocabulary"] = info.vocabulary;
  return j;
}

WireJson observe_message(const Observation& obs) {
  const auto& turns = obs.context.turns;
  WireJson j;
  j["type"] = "observe";
  j["step"] = obs.step;
  j["text"] = turns.empty() ? std::string{} : turns.back().text;
  const Raster* current = nullptr;
  if (!turns.empty() && turns.back().observation) {
    auto it = obs.frames.find(*turns.back().observation);
    if (it != obs.frames.end()) current = &it->second;
  }
  if (current != nullptr) {
    j["image"] = encode_frame(*current);
    j["mime"] = kPpmMime;
  } else {
    j["image"] = nullptr;
    j["mime"] = nullptr;
  }
  j["attempt"] = obs.attempt;
  WireJson history = WireJson::array();
  for (std::size_t i = 0; i + 1 < turns.size(); ++i) {
    WireJson t;
    t["role"] = turns[i].role == Role::User ? "user" : "agent";
    t["text"] = turns[i].text;
    if (turns[i].observation) {
      auto it = obs.frames.find(*turns[i].observation);
      if (it != obs.frames.end()) {
        t["image"] = encode_frame(it->second);
        t["mime"] = kPpmMime;
      }
    }
    history.push_back(std::move(t));
  }
  j["history"] = std::move(history);
  return j;
}

WireJson act_message(const std::string& text) {
  WireJson j;
  j["type"] = "act";
  j["text"] = text;
  return j;
}

WireJson episode_end_message(double score) {
  WireJson j;
  j["type"] = "episode_end";
  j["score"] = score;
  return j;
}

std::string act_text(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw AgentError("agent reply is not a JSON object");
  if (j.value("type", std::string{}) != "act") throw AgentError("agent reply is not an act message");
  const auto it = j.find("text");
  if (it == j.end() || !it->is_string()) throw AgentError("act message without text");
  return it->get<std::string>();
}

}  // namespace mage::harness
