#include "magebench/harness/transcript.hpp"

#include <algorithm>
#include <stdexcept>

namespace mage::harness {

int Transcript::agent_turns() const {
  return static_cast<int>(std::count_if(turns.begin(), turns.end(), [](const Turn& t) { return t.role == Role::Agent; }));
}

int Transcript::observation_count() const {
  return static_cast<int>(std::count_if(turns.begin(), turns.end(), [](const Turn& t) { return t.observation.has_value(); }));
}

namespace {

std::string join(std::initializer_list<std::string_view> parts, std::string_view sep) {
  std::string out;
  for (auto p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

Transcript online_window(const PromptSet& prompts, std::span<const StepRecord> history, int t, int am, int om) {
  if (t < 1) throw std::invalid_argument("decision steps start at 1");
  if (am < 1 || om < 1 || om > am) throw std::invalid_argument("memory windows need 1 <= OM <= AM");
  if (static_cast<int>(history.size()) != t - 1) throw std::invalid_argument("history must cover steps 1..t-1");

  const int n = std::min(t - 1, am);
  const int first_obs = t - n;              // frame step of the opening user turn
  const int first_image = t - std::min(t, om) + 1;
  const std::string unavailable = image_unavailable();
  const std::string cont = continue_prompt();

  Transcript tr;
  const auto frame = [&](int step) -> std::optional<int> {
    if (step >= first_image) return step;
    return std::nullopt;
  };
  {
    auto obs = frame(first_obs);
    tr.turns.push_back({Role::User,
                        join({prompts.system_prompt, prompts.task_prompt, obs ? "" : unavailable, prompts.cot_prompt},
                             "\n") +
                            "\n\n" + prompts.io_prompt,
                        obs});
  }
  for (int step = first_obs; step < t; ++step) {
    const auto& rec = history[static_cast<std::size_t>(step - 1)];
    tr.turns.push_back({Role::Agent, rec.output, std::nullopt});
    tr.raw_outputs.push_back(rec.output);
    if (rec.action) tr.actions.push_back(*rec.action);
    auto obs = frame(step + 1);
    tr.turns.push_back({Role::User, obs ? cont : cont + "\n" + unavailable, obs});
  }
  return tr;
}

Transcript global_prompt(const PromptSet& prompts) {
  Transcript tr;
  const bool frame = prompts.task_prompt.empty();
  tr.turns.push_back(
      {Role::User, join({prompts.system_prompt, prompts.task_prompt, prompts.cot_prompt, prompts.io_prompt}, "\n\n"),
       frame ? std::optional<int>(1) : std::nullopt});
  return tr;
}

}  // namespace mage::harness
