#include "magebench/metrics/report.hpp"

#include <fmt/format.h>

namespace mage::metrics {

namespace {

double pct(int k, int n) { return n == 0 ? 0.0 : 100.0 * k / n; }

}  // namespace

nlohmann::ordered_json report_json(const AggregateReport& r) {
  nlohmann::ordered_json j;
  j["env"] = r.env;
  j["mode"] = r.mode;
  j["repeats"] = r.repeats;
  j["episodes"] = r.episodes;
  j["complete"] = r.complete;
  j["missing"] = r.missing;
  j["mean"] = r.mean;
  j["sd"] = r.sd;
  j["stderr"] = r.stderr_mean;
  j["band"] = r.band;
  j["band_definition"] = "+/- 2 x standard error of the per-level means";
  j["errors"] = {{"episodes", r.errors.episodes},
                 {"ife_pct", pct(r.errors.ife, r.errors.episodes)},
                 {"invalid_actions_pct", pct(r.errors.invalid, r.errors.episodes)},
                 {"repeating_actions_pct", pct(r.errors.repeating, r.errors.episodes)},
                 {"pooled",
                  {{"kind", harness::error_kind_name(r.errors.pooled.kind)},
                   {"unparsed_fraction", r.errors.pooled.unparsed_fraction},
                   {"mode_action_fraction", r.errors.pooled.mode_action_fraction}}}};
  auto bon = nlohmann::ordered_json::array();
  for (const auto& [n, v] : r.best_of_n) bon.push_back({{"n", n}, {"score", v}});
  j["best_of_n"] = std::move(bon);
  auto levels = nlohmann::ordered_json::array();
  for (const auto& s : r.levels) {
    levels.push_back({{"level", s.level},
                      {"samples", s.scores.size()},
                      {"mean", s.mean},
                      {"sd", s.sd},
                      {"min", s.min},
                      {"max", s.max}});
  }
  j["levels"] = std::move(levels);
  return j;
}

std::string report_text(const AggregateReport& r) {
  std::string out = fmt::format("{} / {}: {} levels, {} episodes{}\n", r.env, r.mode, r.levels.size(), r.episodes,
                                r.complete ? "" : " (incomplete)");
  out += fmt::format("  score  {:.2f} +/- {:.2f}  (2 x stderr of level means)\n", r.mean, r.band);
  out += fmt::format("  IFE {:.1f}%  IA {:.1f}%  RA {:.1f}%\n", pct(r.errors.ife, r.errors.episodes),
                     pct(r.errors.invalid, r.errors.episodes), pct(r.errors.repeating, r.errors.episodes));
  if (!r.best_of_n.empty()) {
    out += "  best-of-N";
    for (const auto& [n, v] : r.best_of_n) out += fmt::format("  N={}: {:.2f}", n, v);
    out += '\n';
  }
  for (const auto& m : r.missing) out += "  missing " + m + '\n';
  return out;
}

AesSummary summarize_aes(std::span<const webui::AESReport> reports) {
  AesSummary s;
  s.pages = static_cast<int>(reports.size());
  if (reports.empty()) return s;
  std::int64_t aes = 0, parse = 0, render = 0, action = 0, match = 0, attr = 0;
  for (const auto& r : reports) {
    aes += r.aes;
    parse += r.parse;
    render += r.render;
    action += r.action;
    match += r.match;
    attr += r.attr;
  }
  const double n = static_cast<double>(reports.size()) * 1e6;
  s.aes = aes / n;
  s.parse = parse / n;
  s.render = render / n;
  s.action = action / n;
  s.match = match / n;
  s.attr = attr / n;
  return s;
}

nlohmann::ordered_json aes_summary_json(const AesSummary& s) {
  return {{"pages", s.pages}, {"aes", s.aes},       {"parse", s.parse}, {"render", s.render},
          {"action", s.action}, {"match", s.match}, {"attr", s.attr}};
}

}  // namespace mage::metrics
