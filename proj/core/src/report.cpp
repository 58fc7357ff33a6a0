#include "dualtrace/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace dualtrace {
namespace {

constexpr IkiCategory kAlternatives[] = {
    IkiCategory::ime_before_formula, IkiCategory::ime_after_formula,
    IkiCategory::ime_before_flight, IkiCategory::ime_after_flight};

std::u32string replay_text(std::span<const KeyEvent> keys) {
  std::u32string text;
  for (const auto& k : keys) {
    if (!k.is_down() || k.position < 0) continue;
    auto pos = static_cast<std::size_t>(k.position);
    switch (k.key.kind()) {
      case KeyKind::backspace:
        if (pos > 0 && pos <= text.size()) text.erase(pos - 1, 1);
        break;
      case KeyKind::canc:
        if (pos < text.size()) text.erase(pos, 1);
        break;
      default:
        if (pos > text.size()) text.resize(pos, U' ');
        text.insert(pos, k.key.symbol());
    }
  }
  return text;
}

std::string number(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

}  // namespace

MetricsReport analyze_trace(std::span<const DualTraceEvent> trace, const Segmenter& seg,
                            double outlier_sd) {
  MetricsReport report;
  report.outlier_sd = outlier_sd;
  report.diagnostics = diagnose(trace);

  const auto ikis = compute_ikis(trace, seg);
  report.excluded_confirmations = ikis.excluded_confirmations;
  auto row = [&](std::string name, const std::vector<std::int64_t>& values) {
    report.rows.push_back({std::move(name), summarize(values, outlier_sd)});
  };
  for (auto c : pinyin_categories) row(std::string(to_string(c)), ikis.values(c));
  for (auto c : kAlternatives) row(std::string(to_string(c)), ikis.values(c));

  std::vector<KeyEvent> keys;
  keys.reserve(trace.size());
  for (const auto& e : trace) keys.push_back(e.base);

  if (ikis.trees.empty() && ikis.excluded_confirmations == 0) {
    std::vector<std::int64_t> within, between;
    for (const auto& s : classify_alphabetic(keys, replay_text(keys)))
      (s.category == IkiCategory::within_word ? within : between).push_back(s.value_ms);
    row("within_word", within);
    row("between_word", between);
  }

  const auto timing = decompose_timing(keys);
  row("dwell", timing.dwell);
  row("positive_iki", timing.positive_iki);
  row("rollover", timing.rollover);
  return report;
}

std::string format_csv(const MetricsReport& report) {
  std::ostringstream out;
  out << "metric,count,mean,median,sd,filtered_count,filtered_mean,filtered_median,"
         "filtered_sd,outliers,outlier_pct\n";
  for (const auto& r : report.rows) {
    const auto& s = r.stats;
    out << r.metric << ',' << s.raw.count << ',' << number(s.raw.mean) << ','
        << number(s.raw.median) << ',' << number(s.raw.sd) << ',' << s.filtered.count << ','
        << number(s.filtered.mean) << ',' << number(s.filtered.median) << ','
        << number(s.filtered.sd) << ',' << s.outlier_count << ',' << number(s.outlier_pct)
        << '\n';
  }
  return out.str();
}

std::string format_table(const MetricsReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "metric" << std::right << std::setw(7) << "n"
      << std::setw(10) << "mean" << std::setw(10) << "median" << std::setw(10) << "sd"
      << std::setw(7) << "n'" << std::setw(10) << "mean'" << std::setw(10) << "sd'"
      << std::setw(9) << "out%" << '\n';
  for (const auto& r : report.rows) {
    const auto& s = r.stats;
    out << std::left << std::setw(20) << r.metric << std::right << std::setw(7) << s.raw.count
        << std::setw(10) << number(s.raw.mean) << std::setw(10) << number(s.raw.median)
        << std::setw(10) << number(s.raw.sd) << std::setw(7) << s.filtered.count
        << std::setw(10) << number(s.filtered.mean) << std::setw(10) << number(s.filtered.sd)
        << std::setw(9) << number(s.outlier_pct) << '\n';
  }
  const auto& d = report.diagnostics;
  out << "\nkeydowns " << d.keydowns << ", coherent " << d.coherent << ", resolved "
      << d.resolved_total() << ", unresolved " << d.unresolved << ", excluded confirmations "
      << report.excluded_confirmations << ", outlier threshold " << report.outlier_sd << " SD\n";
  for (const auto& [rule, count] : d.resolved) out << "  " << rule << ' ' << count << '\n';
  return out.str();
}

}  // namespace dualtrace
