#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "magebench/common/raster.hpp"
#include "magebench/harness/agent.hpp"

namespace mage::harness {

using WireJson = nlohmann::ordered_json;

// Every message leads with "type", then the protocol fields in order.
// observe appends "history": earlier turns of the context window, each
// {role, text} plus image/mime when it carries a frame.
WireJson episode_start_message(const EpisodeInfo& info);
WireJson observe_message(const Observation& obs);
WireJson act_message(const std::string& text);
WireJson episode_end_message(double score);

// Text of an act reply. Throws AgentError on anything else.
std::string act_text(const std::string& line);

}  // namespace mage::harness
