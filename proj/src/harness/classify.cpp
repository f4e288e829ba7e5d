#include "magebench/harness/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mage::harness {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::None: return "none";
    case ErrorKind::InvalidActions: return "invalid_actions";
    case ErrorKind::RepeatingActions: return "repeating_actions";
  }
  return "?";
}

ErrorClassification classify_errors(std::span<const OutputRecord> outputs) {
  if (outputs.empty()) throw std::invalid_argument("classify_errors needs at least one output");
  std::size_t unparsed = 0;
  std::size_t total_actions = 0;
  std::map<std::string, std::size_t> counts;
  for (const auto& o : outputs) {
    if (!o.parsed) {
      ++unparsed;
      continue;
    }
    for (const auto& a : o.actions) {
      ++counts[a];
      ++total_actions;
    }
  }
  ErrorClassification c;
  c.unparsed_fraction = static_cast<double>(unparsed) / static_cast<double>(outputs.size());
  std::size_t top = 0;
  for (const auto& [_, n] : counts) top = std::max(top, n);
  c.mode_action_fraction = total_actions == 0 ? 0.0 : static_cast<double>(top) / static_cast<double>(total_actions);
  // integer comparisons so 9/10 lands exactly on the boundary
  if (unparsed * 10 > outputs.size() * 9) {
    c.kind = ErrorKind::InvalidActions;
  } else if (total_actions > 0 && top * 10 >= total_actions * 9) {
    c.kind = ErrorKind::RepeatingActions;
  }
  c.ife = c.kind != ErrorKind::None;
  return c;
}

}  // namespace mage::harness
