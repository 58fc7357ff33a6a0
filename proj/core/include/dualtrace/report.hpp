#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dualtrace/hybridizer.hpp"
#include "dualtrace/metrics.hpp"

namespace dualtrace {

struct MetricsRow {
  std::string metric;
  SummaryStats stats;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;
  HybridDiagnostics diagnostics;
  std::size_t excluded_confirmations = 0;
  double outlier_sd = 2.0;
};

/// Pinyin categories and their alternative readings, then dwell, positive
/// IKI and rollover. Sessions without confirmations also get within/between
/// word rows; their text is replayed from the logged positions, with
/// skipped positions read as spaces.
MetricsReport analyze_trace(std::span<const DualTraceEvent> trace, const Segmenter& seg,
                            double outlier_sd = 2.0);

std::string format_csv(const MetricsReport& report);
std::string format_table(const MetricsReport& report);

}  // namespace dualtrace
