#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mage::harness {

enum class ParseMode { Single, Sequence };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finds the last "action"/"actions" header (markdown hashes and a trailing
// colon optional, content may follow on the same line) and reads vocabulary
// tokens after it. Tokens match case-insensitively and come back in the
// vocabulary's spelling. Sequence mode keeps every vocabulary token up to
// the next header; anything else between commas is dropped. Single mode
// takes the first one.
std::vector<std::string> parse_actions(std::string_view text, const std::vector<std::string>& vocab,
                                       ParseMode mode);

}  // namespace mage::harness
