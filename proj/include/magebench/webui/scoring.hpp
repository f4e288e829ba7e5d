#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "magebench/webui/matching.hpp"
#include "magebench/webui/snapshot.hpp"

namespace mage::webui {

struct ScoreWeights {
  std::map<std::string, double> alpha;  // per attribute name
  double default_alpha = 1.0;
  double beta = 0.5;
  double alpha_for(const std::string& attribute) const;
};

// Weight-independent part of a page score: which atoms matched and the
// per-attribute similarities. Computing this once lets weight searches
// re-score without re-running the matcher.
struct AtomScore {
  double space = 0.0;
  bool matched = false;
  std::vector<std::pair<std::string, double>> similarities;  // over gt eval_by
};

struct PrecomputedPage {
  std::string action_id;
  PageStatus status = PageStatus::OK;
  std::vector<AtomScore> atoms;
};

PrecomputedPage precompute_page(const PageSnapshot& gen, const PageSnapshot& gt, const MatchConfig& cfg);

struct PageScore {
  std::string action_id;
  PageStatus status = PageStatus::OK;
  double s_act = 0.0;           // in [0, 1]
  double unmatched_share = 0.0;  // weight of gt atoms without a match
  double attr_loss = 0.0;        // weight lost on matched atoms' attributes
};

PageScore score_precomputed(const PrecomputedPage& page, const ScoreWeights& w);
PageScore score_page(const PageSnapshot& gen, const PageSnapshot& gt, const MatchConfig& cfg, const ScoreWeights& w);

inline constexpr std::int64_t kMicroPercentTotal = 100'000'000;  // 100% in 1e-6 % units

// AES and the loss buckets in micro-percent; they always add up to exactly
// kMicroPercentTotal (attribute loss absorbs rounding).
struct AESReport {
  std::int64_t aes = 0;
  std::int64_t parse = 0;
  std::int64_t render = 0;
  std::int64_t action = 0;
  std::int64_t match = 0;
  std::int64_t attr = 0;
  std::vector<PageScore> pages;

  double aes_percent() const { return static_cast<double>(aes) / 1e6; }
  std::int64_t total() const { return aes + parse + render + action + match + attr; }
};

// Pages are aligned by action id; gt order defines the page list. A gen page
// missing for an interaction counts as InteractionError; a failed initial
// page (parse or render) zeroes the whole AES.
std::vector<PrecomputedPage> precompute_aes(const std::vector<PageSnapshot>& gen, const std::vector<PageSnapshot>& gt,
                                            const MatchConfig& cfg);
AESReport aes_precomputed(const std::vector<PrecomputedPage>& pages, const ScoreWeights& w);
AESReport aes(const std::vector<PageSnapshot>& gen, const std::vector<PageSnapshot>& gt, const MatchConfig& cfg,
              const ScoreWeights& w);

std::string format_report(const AESReport& r);

}  // namespace mage::webui
