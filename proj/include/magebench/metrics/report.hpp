#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "magebench/metrics/aggregate.hpp"
#include "magebench/webui/scoring.hpp"

namespace mage::metrics {

nlohmann::ordered_json report_json(const AggregateReport& r);

// Plain-text table: score with its band, error percentages, best-of-N row.
std::string report_text(const AggregateReport& r);

// Corpus means of AES and the loss buckets, in percent.
struct AesSummary {
  int pages = 0;
  double aes = 0.0, parse = 0.0, render = 0.0, action = 0.0, match = 0.0, attr = 0.0;
};
AesSummary summarize_aes(std::span<const webui::AESReport> reports);
nlohmann::ordered_json aes_summary_json(const AesSummary& s);

}  // namespace mage::metrics
