#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "magebench/webui/attributes.hpp"
#include "magebench/webui/snapshot.hpp"

namespace mage::webui {

struct MatchConfig {
  double children_penalty = 1e-3;
  std::map<AttrKind, double> thresholds = {
      {AttrKind::Text, 0.5}, {AttrKind::Discrete, 1.0}, {AttrKind::Continuous, 0.5}, {AttrKind::Color, 0.8}};
  double threshold_for(AttrKind k) const;
};

// False when the gt element names a filter attribute and the generated
// element's value for it is below the kind's threshold (or missing).
bool passes_filter(const ElementSnapshot& gen, const ElementSnapshot& gt, const MatchConfig& cfg);

// GIoU + filter (0 or -1) - eps * |children difference|.
double match_score(const ElementSnapshot& gen, const ElementSnapshot& gt, const MatchConfig& cfg);

struct PageMatch {
  std::vector<std::size_t> atoms;                      // indices of gt atomic elements
  std::vector<std::optional<std::size_t>> gen_for_atom;  // matched generated element
  std::vector<bool> filtered;  // assigned by the solver but rejected by the filter
};

// Hungarian maximization of match_score between gt atoms and all generated
// elements. A filtered-out pair is reported as unmatched.
PageMatch match_elements(const PageSnapshot& gen, const PageSnapshot& gt, const MatchConfig& cfg);

}  // namespace mage::webui
