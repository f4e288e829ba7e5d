#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "magebench/harness/classify.hpp"

namespace mage::harness {

struct Decision {
  int step = 1;
  int attempts = 1;
  std::string output;  // last attempt
  bool parsed = false;
  std::vector<std::string> actions;
};

struct EpisodeResult {
  std::string env;
  std::string mode;
  std::string level_id;
  int repeat = 0;
  std::uint64_t seed = 0;
  double score = 0.0;
  std::string termination;
  int agent_calls = 0;
  std::vector<Decision> decisions;
  std::vector<double> rewards;
  ErrorClassification errors;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();

  std::vector<OutputRecord> outputs() const;
  int unparsed() const;
};

nlohmann::ordered_json to_json(const EpisodeResult& r);
EpisodeResult episode_from_json(const nlohmann::ordered_json& j);

}  // namespace mage::harness
