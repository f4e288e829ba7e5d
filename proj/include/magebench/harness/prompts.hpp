#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mage::harness {

enum class EnvKind { Sokoban, Football, WebUI };
enum class Mode { Global, Online };

std::string_view env_name(EnvKind env);
std::optional<EnvKind> env_from_name(std::string_view name);
std::string_view mode_name(Mode mode);
std::optional<Mode> mode_from_name(std::string_view name);

struct PromptSet {
  std::string system_prompt;
  // Sokoban and Football leave this empty: the first observation is the task.
  std::string task_prompt;
  std::string cot_prompt;
  std::string io_prompt;
};

// Reads <assets>/prompts/<env>/. Football has no Global prompt and throws
// std::invalid_argument.
PromptSet load_prompts(EnvKind env, Mode mode);

std::string continue_prompt();
std::string image_unavailable();

}  // namespace mage::harness
