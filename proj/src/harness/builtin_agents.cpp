#include <string>

#include "magebench/common/seed.hpp"
#include "magebench/harness/agent.hpp"

namespace mage::harness {

std::string IdleAgent::act(const Observation&) {
  if (info_.env == EnvKind::Football) return "# analyze\nwait.\n# action\naction_idle";
  return "# analyze\nwait.\n# action\n";
}

void RandomAgent::start(const EpisodeInfo& info) {
  info_ = info;
  rng_.seed(derive_seed({seed_, hash_string(info.level_id), info.seed}));
}

std::string RandomAgent::act(const Observation&) {
  if (info_.vocabulary.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, info_.vocabulary.size() - 1);
  if (info_.mode == Mode::Global) {
    std::string out = "### Analyze\nrandom.\n### Actions\n";
    const int n = info_.max_steps > 0 ? info_.max_steps : 50;
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += ", ";
      out += info_.vocabulary[pick(rng_)];
    }
    return out;
  }
  return "# analyze\nrandom.\n# action\n" + info_.vocabulary[pick(rng_)];
}

}  // namespace mage::harness
