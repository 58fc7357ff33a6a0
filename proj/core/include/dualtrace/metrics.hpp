#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualtrace/segmentation_tree.hpp"
#include "dualtrace/trace_model.hpp"

namespace dualtrace {

enum class IkiCategory {
  // Pinyin taxonomy.
  latin_letter,     // ● letters within a syllable
  pinyin_syllable,  // ◆ syllables within a word
  word,             // ■ adjacent words
  ime_before,       // ▲ preceding keydown -> confirmation keydown
  ime_after,        // ▼ confirmation keydown -> following keydown
  // Alphabetic typing.
  within_word,
  between_word,
  // Alternative readings of the IME intervals.
  ime_before_formula,  // first word start - previous confirmation
  ime_after_formula,   // confirmation - text start
  ime_before_flight,   // confirmation keydown - preceding keyup
  ime_after_flight,    // following keydown - confirmation keyup
};

inline constexpr std::array<IkiCategory, 5> pinyin_categories = {
    IkiCategory::latin_letter, IkiCategory::pinyin_syllable, IkiCategory::word,
    IkiCategory::ime_before, IkiCategory::ime_after};

std::string_view to_string(IkiCategory c) noexcept;

struct IkiSample {
  IkiCategory category = IkiCategory::latin_letter;
  std::int64_t value_ms = 0;
  std::int64_t from_id = 0;
  std::int64_t to_id = 0;
};

struct IkiAnalysis {
  std::vector<IkiSample> samples;
  std::vector<SegmentationNode> trees;
  std::size_t excluded_confirmations = 0;
  std::size_t unresolved_events = 0;

  std::vector<std::int64_t> values(IkiCategory c) const;
  std::size_t count(IkiCategory c) const;
};

/// Pinyin-taxonomy IKIs over every confirmation in the trace.
IkiAnalysis compute_ikis(std::span<const DualTraceEvent> trace, const Segmenter& seg);

/// within_word / between_word keydown latencies for Latin typing. An
/// interval is between words when whitespace lies between the two keys'
/// symbols in `text` or a whitespace key was pressed in between.
std::vector<IkiSample> classify_alphabetic(std::span<const KeyEvent> keys,
                                           std::u32string_view text);

struct TimingDecomposition {
  std::vector<std::int64_t> dwell;
  std::vector<std::int64_t> positive_iki;  // includes zero gaps
  std::vector<std::int64_t> rollover;      // negative gaps
  std::vector<std::string> diagnostics;
};

/// Dwell = keyup - keydown; gap = next keydown - previous keyup, taken
/// between consecutive keystrokes in keydown order.
TimingDecomposition decompose_timing(std::span<const KeyEvent> keys);

struct OutlierSplit {
  std::vector<std::int64_t> kept;
  std::vector<std::int64_t> removed;
  double mean = 0.0;
  double sd = 0.0;
};

/// Single pass: mean and SD over all samples, then drop |x - mean| > k*sd.
OutlierSplit filter_outliers(std::span<const std::int64_t> samples, double k = 2.0);

double mean(std::span<const std::int64_t> samples);
/// Mean of the two middle values for even counts.
double median(std::span<const std::int64_t> samples);
/// Population standard deviation (n denominator).
double standard_deviation(std::span<const std::int64_t> samples);

struct BasicStats {
  std::size_t count = 0;
  std::optional<double> mean;
  std::optional<double> median;
  std::optional<double> sd;
};

struct SummaryStats {
  BasicStats raw;
  BasicStats filtered;
  std::size_t outlier_count = 0;
  double outlier_pct = 0.0;
};

BasicStats basic_stats(std::span<const std::int64_t> samples);
SummaryStats summarize(std::span<const std::int64_t> samples, double k = 2.0);

}  // namespace dualtrace
