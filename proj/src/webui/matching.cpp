#include "magebench/webui/matching.hpp"

#include <cstdlib>

#include "magebench/webui/hungarian.hpp"

namespace mage::webui {

double MatchConfig::threshold_for(AttrKind k) const {
  const auto it = thresholds.find(k);
  return it == thresholds.end() ? 1.0 : it->second;
}

bool passes_filter(const ElementSnapshot& gen, const ElementSnapshot& gt, const MatchConfig& cfg) {
  if (!gt.filter_by) return true;
  const auto want = gt.attributes.find(*gt.filter_by);
  const auto have = gen.attributes.find(*gt.filter_by);
  if (want == gt.attributes.end() || have == gen.attributes.end()) return false;
  const AttrKind kind = kind_of(*gt.filter_by);
  return attr_similarity(kind, want->second, have->second) >= cfg.threshold_for(kind);
}

double match_score(const ElementSnapshot& gen, const ElementSnapshot& gt, const MatchConfig& cfg) {
  const double filter = passes_filter(gen, gt, cfg) ? 0.0 : -1.0;
  return giou(gen.bbox, gt.bbox) + filter - cfg.children_penalty * std::abs(gen.children - gt.children);
}

PageMatch match_elements(const PageSnapshot& gen, const PageSnapshot& gt, const MatchConfig& cfg) {
  PageMatch out;
  for (std::size_t j = 0; j < gt.elements.size(); ++j)
    if (gt.elements[j].atomic()) out.atoms.push_back(j);
  out.gen_for_atom.assign(out.atoms.size(), std::nullopt);
  out.filtered.assign(out.atoms.size(), false);
  if (out.atoms.empty() || gen.elements.empty()) return out;

  std::vector<std::vector<double>> w(out.atoms.size(), std::vector<double>(gen.elements.size()));
  for (std::size_t a = 0; a < out.atoms.size(); ++a)
    for (std::size_t i = 0; i < gen.elements.size(); ++i)
      w[a][i] = match_score(gen.elements[i], gt.elements[out.atoms[a]], cfg);
  const auto assignment = maximize_assignment(w);
  for (std::size_t a = 0; a < out.atoms.size(); ++a) {
    const int col = assignment.row_to_col[a];
    if (col < 0) continue;
    if (passes_filter(gen.elements[col], gt.elements[out.atoms[a]], cfg)) {
      out.gen_for_atom[a] = static_cast<std::size_t>(col);
    } else {
      out.filtered[a] = true;
    }
  }
  return out;
}

}  // namespace mage::webui
