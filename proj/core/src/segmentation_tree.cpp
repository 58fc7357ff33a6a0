#include "dualtrace/segmentation_tree.hpp"

#include <algorithm>

#include "dualtrace/errors.hpp"
#include "dualtrace/pinyin.hpp"

namespace dualtrace {

std::vector<std::string> split_syllables(std::string_view pinyin) {
  if (pinyin.empty()) throw AnalysisError("empty transcription");
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto sep = pinyin.find(pinyin::separator, start);
    const auto part = pinyin.substr(start, sep == std::string_view::npos ? sep : sep - start);
    if (part.empty())
      throw AnalysisError("misplaced separator in '" + std::string(pinyin) + "'");
    out.emplace_back(part);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

CompositionScan locate_compositions(std::span<const DualTraceEvent> trace) {
  CompositionScan scan;
  std::vector<KeyEvent> stack;
  bool tainted = false;
  auto clear = [&] {
    stack.clear();
    tainted = false;
  };

  for (const auto& e : trace) {
    if (!e.base.is_down()) continue;
    const auto kind = e.base.key.kind();
    if (e.status == AlignmentStatus::unresolved) {
      if (kind == KeyKind::letter || kind == KeyKind::backspace) {
        tainted = true;
      } else {
        if (!stack.empty() && e.base.key.is_confirmation_key()) ++scan.excluded;
        clear();
        continue;
      }
    }
    if (e.is_confirmation()) {
      const auto n = pinyin::strip_separators(e.ime->pinyin).size();
      if (tainted || stack.size() < n) {
        ++scan.excluded;
      } else {
        Composition c{e, std::vector<KeyEvent>(stack.end() - static_cast<std::ptrdiff_t>(n),
                                               stack.end())};
        scan.compositions.push_back(std::move(c));
      }
      clear();
    } else if (kind == KeyKind::letter) {
      stack.push_back(e.base);
    } else if (kind == KeyKind::backspace) {
      if (!stack.empty()) stack.pop_back();
    } else {
      clear();
    }
  }
  return scan;
}

std::vector<SegmentationNode> propagate_timestamps(const DualTraceEvent& confirmation,
                                                   std::span<const KeyEvent> letters) {
  if (!confirmation.ime) throw AnalysisError("event is not a confirmation");
  const auto& pinyin = confirmation.ime->pinyin;
  std::string typed;
  for (const auto& k : letters) typed += k.key.name();
  if (typed != pinyin::strip_separators(pinyin))
    throw AnalysisError("letters '" + typed + "' do not spell '" + pinyin + "'");

  std::vector<SegmentationNode> syllables;
  std::size_t next = 0;
  for (const auto& syl : split_syllables(pinyin)) {
    SegmentationNode node;
    node.level = NodeLevel::syllable;
    node.content.assign(syl.begin(), syl.end());
    for (std::size_t i = 0; i < syl.size(); ++i, ++next) {
      const auto& k = letters[next];
      SegmentationNode leaf;
      leaf.level = NodeLevel::letter;
      leaf.content.assign(1, static_cast<unsigned char>(syl[i]));
      leaf.start_t = leaf.end_t = k.t;
      leaf.event_id = k.id;
      node.children.push_back(std::move(leaf));
    }
    refresh_spans(node);
    syllables.push_back(std::move(node));
  }
  return syllables;
}

SegmentationNode build_tree(const Composition& composition, const Segmenter& seg) {
  auto syllables = propagate_timestamps(composition.confirmation, composition.letters);
  const auto& text = composition.confirmation.ime->text;
  if (syllables.size() != text.size()) {
    throw AnalysisError("confirmation at event " + std::to_string(composition.confirmation.base.id) +
                        " has " + std::to_string(syllables.size()) + " syllables for " +
                        std::to_string(text.size()) + " characters");
  }
  SegmentationNode root;
  root.level = NodeLevel::text;
  root.content = text;
  std::size_t next = 0;
  for (auto& word : segment_words(text, seg)) {
    SegmentationNode node;
    node.level = NodeLevel::word;
    node.content = word;
    for (std::size_t i = 0; i < word.size(); ++i) node.children.push_back(std::move(syllables[next++]));
    root.children.push_back(std::move(node));
  }
  refresh_spans(root);
  return root;
}

void refresh_spans(SegmentationNode& node) {
  if (node.children.empty()) return;
  for (auto& child : node.children) refresh_spans(child);
  node.start_t = node.children.front().start_t;
  node.end_t = node.children.front().end_t;
  for (const auto& child : node.children) {
    node.start_t = std::min(node.start_t, child.start_t);
    node.end_t = std::max(node.end_t, child.end_t);
  }
}

}  // namespace dualtrace
