#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualtrace/segmenter.hpp"
#include "dualtrace/trace_model.hpp"

namespace dualtrace {

enum class NodeLevel { text, word, syllable, letter };

struct SegmentationNode {
  NodeLevel level = NodeLevel::letter;
  std::u32string content;
  Timestamp start_t;
  Timestamp end_t;
  std::vector<SegmentationNode> children;
  std::optional<std::int64_t> event_id;  // letters only
};

/// Splits a rendered transcription on ' separators. Throws AnalysisError on
/// empty input or leading, trailing or doubled separators.
std::vector<std::string> split_syllables(std::string_view pinyin);

/// A confirmation together with the keydowns that typed its transcription.
struct Composition {
  DualTraceEvent confirmation;
  std::vector<KeyEvent> letters;  // keydowns, in typing order
};

struct CompositionScan {
  std::vector<Composition> compositions;
  std::size_t excluded = 0;  // confirmations dropped because of unresolved events
};

/// Replays the dual trace keeping a stack of composed letters: letters push,
/// BACKSPACE pops, a confirmation takes the last n letters (n = letters in
/// its pinyin), any other key clears the stack.
CompositionScan locate_compositions(std::span<const DualTraceEvent> trace);

/// Syllable nodes with their letter leaves; each letter takes its keydown
/// time. Throws AnalysisError if the letters do not spell the pinyin.
std::vector<SegmentationNode> propagate_timestamps(const DualTraceEvent& confirmation,
                                                   std::span<const KeyEvent> letters);

/// text -> words -> syllables -> letters. Characters map one-to-one onto
/// syllables, so each word takes as many syllables as it has characters.
SegmentationNode build_tree(const Composition& composition, const Segmenter& seg);

/// Recomputes start/end of inner nodes from their children.
void refresh_spans(SegmentationNode& node);

}  // namespace dualtrace
