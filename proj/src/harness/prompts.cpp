#include "magebench/harness/prompts.hpp"

#include <stdexcept>

#include "magebench/common/assets.hpp"

namespace mage::harness {

namespace {

std::string prompt_file(const std::string& rel) {
  std::string text = read_text_file(asset_root() / "prompts" / rel);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; };
    if (lower(a[i]) != lower(b[i])) return false;
  }
  return true;
}

}  // namespace

std::string_view env_name(EnvKind env) {
  switch (env) {
    case EnvKind::Sokoban: return "sokoban";
    case EnvKind::Football: return "football";
    case EnvKind::WebUI: return "webui";
  }
  return "?";
}

std::optional<EnvKind> env_from_name(std::string_view name) {
  for (EnvKind e : {EnvKind::Sokoban, EnvKind::Football, EnvKind::WebUI}) {
    if (iequals(name, env_name(e))) return e;
  }
  return std::nullopt;
}

std::string_view mode_name(Mode mode) { return mode == Mode::Global ? "global" : "online"; }

std::optional<Mode> mode_from_name(std::string_view name) {
  if (iequals(name, "global")) return Mode::Global;
  if (iequals(name, "online")) return Mode::Online;
  return std::nullopt;
}

PromptSet load_prompts(EnvKind env, Mode mode) {
  const std::string dir{env_name(env)};
  PromptSet p;
  p.system_prompt = prompt_file(dir + "/system.txt");
  switch (env) {
    case EnvKind::Sokoban:
      p.io_prompt = prompt_file(mode == Mode::Global ? "sokoban/global_io.txt" : "sokoban/online_io.txt");
      break;
    case EnvKind::Football:
      if (mode == Mode::Global) throw std::invalid_argument("football supports the online mode only");
      p.io_prompt = prompt_file("football/online_io.txt");
      break;
    case EnvKind::WebUI:
      if (mode == Mode::Online) throw std::invalid_argument("webui runs in the global mode only");
      p.io_prompt = prompt_file("webui/global_io.txt");
      break;
  }
  return p;
}

std::string continue_prompt() { return prompt_file("continue.txt"); }
std::string image_unavailable() { return prompt_file("unavailable.txt"); }

}  // namespace mage::harness
