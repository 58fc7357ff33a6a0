#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dualtrace/metrics.hpp"

namespace dualtrace {
namespace {

void require_samples(std::span<const std::int64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
}

}  // namespace

double mean(std::span<const std::int64_t> samples) {
  require_samples(samples);
  double sum = 0.0;
  for (auto v : samples) sum += static_cast<double>(v);
  return sum / static_cast<double>(samples.size());
}

double median(std::span<const std::int64_t> samples) {
  require_samples(samples);
  std::vector<std::int64_t> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  if (n % 2 == 1) return static_cast<double>(sorted[n / 2]);
  return (static_cast<double>(sorted[n / 2 - 1]) + static_cast<double>(sorted[n / 2])) / 2.0;
}

double standard_deviation(std::span<const std::int64_t> samples) {
  const double mu = mean(samples);
  double acc = 0.0;
  for (auto v : samples) acc += (static_cast<double>(v) - mu) * (static_cast<double>(v) - mu);
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

OutlierSplit filter_outliers(std::span<const std::int64_t> samples, double k) {
  OutlierSplit out;
  if (samples.empty()) return out;
  out.mean = mean(samples);
  out.sd = standard_deviation(samples);
  for (auto v : samples) {
    const bool outlier = std::abs(static_cast<double>(v) - out.mean) > k * out.sd;
    (outlier ? out.removed : out.kept).push_back(v);
  }
  return out;
}

BasicStats basic_stats(std::span<const std::int64_t> samples) {
  BasicStats s;
  s.count = samples.size();
  if (samples.empty()) return s;
  s.mean = mean(samples);
  s.median = median(samples);
  s.sd = standard_deviation(samples);
  return s;
}

SummaryStats summarize(std::span<const std::int64_t> samples, double k) {
  SummaryStats s;
  s.raw = basic_stats(samples);
  const auto split = filter_outliers(samples, k);
  s.filtered = basic_stats(split.kept);
  s.outlier_count = split.removed.size();
  if (!samples.empty())
    s.outlier_pct = 100.0 * static_cast<double>(split.removed.size()) /
                    static_cast<double>(samples.size());
  return s;
}

}  // namespace dualtrace
