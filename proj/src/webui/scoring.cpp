#include "magebench/webui/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace mage::webui {

double ScoreWeights::alpha_for(const std::string& attribute) const {
  const auto it = alpha.find(attribute);
  return it == alpha.end() ? default_alpha : it->second;
}

PrecomputedPage precompute_page(const PageSnapshot& gen, const PageSnapshot& gt, const MatchConfig& cfg) {
  PrecomputedPage out;
  out.action_id = gt.action_id;
  out.status = gen.status;
  if (gen.status != PageStatus::OK) return out;
  const PageMatch m = match_elements(gen, gt, cfg);
  out.atoms.reserve(m.atoms.size());
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    const ElementSnapshot& g = gt.elements[m.atoms[a]];
    AtomScore atom;
    atom.space = g.space();
    atom.matched = m.gen_for_atom[a].has_value();
    if (atom.matched) {
      const ElementSnapshot& e = gen.elements[*m.gen_for_atom[a]];
      for (const auto& name : g.eval_by) {
        const auto it = e.attributes.find(name);
        const double sim = it == e.attributes.end() ? 0.0 : attr_similarity(name, g.attributes.at(name), it->second);
        atom.similarities.emplace_back(name, sim);
      }
    }
    out.atoms.push_back(std::move(atom));
  }
  return out;
}

PageScore score_precomputed(const PrecomputedPage& page, const ScoreWeights& w) {
  PageScore s;
  s.action_id = page.action_id;
  s.status = page.status;
  if (page.status != PageStatus::OK || page.atoms.empty()) return s;

  std::vector<double> weight(page.atoms.size());
  double norm = 0.0;
  for (std::size_t a = 0; a < page.atoms.size(); ++a) {
    weight[a] = std::pow(page.atoms[a].space, w.beta);
    norm += weight[a];
  }
  if (norm <= 0.0) {
    std::fill(weight.begin(), weight.end(), 1.0);
    norm = static_cast<double>(weight.size());
  }
  // Numerator and norm are accumulated in the same order, so a perfect page
  // gives exactly 1.
  double score = 0.0, lost_match = 0.0, lost_attr = 0.0;
  for (std::size_t a = 0; a < page.atoms.size(); ++a) {
    const AtomScore& atom = page.atoms[a];
    if (!atom.matched) {
      lost_match += weight[a];
      continue;
    }
    double num = 0.0, den = 0.0, plain = 0.0;
    for (const auto& [name, sim] : atom.similarities) {
      const double al = w.alpha_for(name);
      num += al * sim;
      den += al;
      plain += sim;
    }
    double sim = 1.0;
    if (!atom.similarities.empty()) sim = den > 0.0 ? num / den : plain / static_cast<double>(atom.similarities.size());
    score += sim * weight[a];
    lost_attr += (1.0 - sim) * weight[a];
  }
  s.s_act = std::clamp(score / norm, 0.0, 1.0);
  s.unmatched_share = lost_match / norm;
  s.attr_loss = lost_attr / norm;
  return s;
}

PageScore score_page(const PageSnapshot& gen, const PageSnapshot& gt, const MatchConfig& cfg, const ScoreWeights& w) {
  return score_precomputed(precompute_page(gen, gt, cfg), w);
}

std::vector<PrecomputedPage> precompute_aes(const std::vector<PageSnapshot>& gen, const std::vector<PageSnapshot>& gt,
                                            const MatchConfig& cfg) {
  if (gt.empty()) throw std::invalid_argument("aes: no ground-truth pages");
  std::vector<PrecomputedPage> out;
  for (std::size_t k = 0; k < gt.size(); ++k) {
    const auto it = std::find_if(gen.begin(), gen.end(),
                                 [&](const PageSnapshot& p) { return p.action_id == gt[k].action_id; });
    if (it == gen.end()) {
      PrecomputedPage missing;
      missing.action_id = gt[k].action_id;
      missing.status = k == 0 ? PageStatus::RenderError : PageStatus::InteractionError;
      out.push_back(std::move(missing));
    } else {
      out.push_back(precompute_page(*it, gt[k], cfg));
    }
  }
  return out;
}

AESReport aes_precomputed(const std::vector<PrecomputedPage>& pages, const ScoreWeights& w) {
  if (pages.empty()) throw std::invalid_argument("aes: no pages");
  AESReport r;
  for (const auto& p : pages) r.pages.push_back(score_precomputed(p, w));

  const PageStatus first = pages.front().status;
  if (first == PageStatus::ParseError || first == PageStatus::RenderError) {
    (first == PageStatus::ParseError ? r.parse : r.render) = kMicroPercentTotal;
    for (auto& p : r.pages) p.s_act = 0.0;
    return r;
  }

  const double share = 100.0 / static_cast<double>(pages.size());
  double aes = 0.0, parse = 0.0, render = 0.0, action = 0.0, match = 0.0;
  for (const auto& p : r.pages) {
    switch (p.status) {
      case PageStatus::OK:
        aes += share * p.s_act;
        match += share * p.unmatched_share;
        break;
      case PageStatus::ParseError: parse += share; break;
      case PageStatus::RenderError: render += share; break;
      case PageStatus::InteractionError: action += share; break;
    }
  }
  auto micro = [](double pct) { return static_cast<std::int64_t>(std::llround(pct * 1e6)); };
  r.aes = micro(aes);
  r.parse = micro(parse);
  r.render = micro(render);
  r.action = micro(action);
  r.match = micro(match);
  r.attr = kMicroPercentTotal - r.aes - r.parse - r.render - r.action - r.match;
  if (r.attr < 0) {  // rounding overshoot; take it back from the largest loss bucket
    std::int64_t* largest = &r.match;
    for (std::int64_t* b : {&r.parse, &r.render, &r.action})
      if (*b > *largest) largest = b;
    *largest += r.attr;
    r.attr = 0;
  }
  return r;
}

AESReport aes(const std::vector<PageSnapshot>& gen, const std::vector<PageSnapshot>& gt, const MatchConfig& cfg,
              const ScoreWeights& w) {
  return aes_precomputed(precompute_aes(gen, gt, cfg), w);
}

std::string format_report(const AESReport& r) {
  nlohmann::ordered_json j;
  auto pct = [](std::int64_t m) { return static_cast<double>(m) / 1e6; };
  j["aes"] = pct(r.aes);
  j["buckets"] = {{"Par.", pct(r.parse)},
                  {"Ren.", pct(r.render)},
                  {"Act.", pct(r.action)},
                  {"Mat.", pct(r.match)},
                  {"Attr.", pct(r.attr)}};
  j["micro_percent"] = {{"aes", r.aes},     {"parse", r.parse}, {"render", r.render},
                        {"action", r.action}, {"match", r.match}, {"attr", r.attr}};
  nlohmann::ordered_json pages = nlohmann::ordered_json::array();
  for (const auto& p : r.pages) {
    pages.push_back({{"action_id", p.action_id},
                     {"status", status_name(p.status)},
                     {"s_act", p.s_act},
                     {"unmatched_share", p.unmatched_share},
                     {"attr_loss", p.attr_loss}});
  }
  j["pages"] = std::move(pages);
  return j.dump(2) + "\n";
}

}  // namespace mage::webui
