#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mage::harness {

enum class ErrorKind { None, InvalidActions, RepeatingActions };

std::string_view error_kind_name(ErrorKind kind);

struct OutputRecord {
  bool parsed = false;
  std::vector<std::string> actions;
};

struct ErrorClassification {
  ErrorKind kind = ErrorKind::None;
  bool ife = false;
  double unparsed_fraction = 0.0;
  double mode_action_fraction = 0.0;
};

inline constexpr double kInvalidThreshold = 0.9;    // strictly above
inline constexpr double kRepeatingThreshold = 0.9;  // at or above

// Invalid actions take precedence when both fire. Throws
// std::invalid_argument on an empty record list.
ErrorClassification classify_errors(std::span<const OutputRecord> outputs);

}  // namespace mage::harness
