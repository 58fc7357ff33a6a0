#include <algorithm>
#include <map>

#include "dualtrace/metrics.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace {
namespace {

bool free_standing_symbol(const DualTraceEvent& e) {
  if (e.is_confirmation()) return false;
  switch (e.base.key.kind()) {
    case KeyKind::punct:
    case KeyKind::digit:
    case KeyKind::other:
      return e.status != AlignmentStatus::unresolved;
    default:
      return false;
  }
}

}  // namespace

std::string_view to_string(IkiCategory c) noexcept {
  switch (c) {
    case IkiCategory::latin_letter: return "latin_letter";
    case IkiCategory::pinyin_syllable: return "pinyin_syllable";
    case IkiCategory::word: return "word";
    case IkiCategory::ime_before: return "ime_before";
    case IkiCategory::ime_after: return "ime_after";
    case IkiCategory::within_word: return "within_word";
    case IkiCategory::between_word: return "between_word";
    case IkiCategory::ime_before_formula: return "ime_before_formula";
    case IkiCategory::ime_after_formula: return "ime_after_formula";
    case IkiCategory::ime_before_flight: return "ime_before_flight";
    case IkiCategory::ime_after_flight: return "ime_after_flight";
  }
  return "unknown";
}

std::vector<std::int64_t> IkiAnalysis::values(IkiCategory c) const {
  std::vector<std::int64_t> out;
  for (const auto& s : samples)
    if (s.category == c) out.push_back(s.value_ms);
  return out;
}

std::size_t IkiAnalysis::count(IkiCategory c) const {
  return static_cast<std::size_t>(std::count_if(
      samples.begin(), samples.end(), [c](const IkiSample& s) { return s.category == c; }));
}

IkiAnalysis compute_ikis(std::span<const DualTraceEvent> trace, const Segmenter& seg) {
  IkiAnalysis out;
  std::vector<const DualTraceEvent*> downs;
  std::map<std::int64_t, std::size_t> order;
  std::map<std::int64_t, Timestamp> keyup;
  for (const auto& e : trace) {
    if (e.base.is_down()) {
      order[e.base.id] = downs.size();
      downs.push_back(&e);
      if (e.status == AlignmentStatus::unresolved) ++out.unresolved_events;
    } else {
      keyup[e.base.id] = e.base.t;
    }
  }

  const auto scan = locate_compositions(trace);
  out.excluded_confirmations = scan.excluded;
  auto add = [&](IkiCategory c, Timestamp from, Timestamp to, std::int64_t from_id,
                 std::int64_t to_id) { out.samples.push_back({c, to - from, from_id, to_id}); };

  struct WordSpan {
    Timestamp start, end;
    std::int64_t first_id, last_id;
  };
  std::vector<WordSpan> words;
  const DualTraceEvent* previous_confirmation = nullptr;

  for (const auto& comp : scan.compositions) {
    auto tree = build_tree(comp, seg);
    const auto& conf = comp.confirmation.base;

    const auto first = order.at(comp.letters.front().id);
    if (first > 0 && free_standing_symbol(*downs[first - 1])) {
      const auto& sym = downs[first - 1]->base;
      add(IkiCategory::latin_letter, sym.t, comp.letters.front().t, sym.id,
          comp.letters.front().id);
    }

    for (const auto& word : tree.children) {
      const SegmentationNode* prev_syl = nullptr;
      for (const auto& syl : word.children) {
        for (std::size_t i = 1; i < syl.children.size(); ++i) {
          const auto& a = syl.children[i - 1];
          const auto& b = syl.children[i];
          add(IkiCategory::latin_letter, a.start_t, b.start_t, *a.event_id, *b.event_id);
        }
        if (prev_syl) {
          add(IkiCategory::pinyin_syllable, prev_syl->end_t, syl.start_t,
              *prev_syl->children.back().event_id, *syl.children.front().event_id);
        }
        prev_syl = &syl;
      }
      words.push_back({word.start_t, word.end_t,
                       *word.children.front().children.front().event_id,
                       *word.children.back().children.back().event_id});
    }

    const auto at = order.at(conf.id);
    if (at > 0) {
      const auto& prev = downs[at - 1]->base;
      add(IkiCategory::ime_before, prev.t, conf.t, prev.id, conf.id);
      if (auto up = keyup.find(prev.id); up != keyup.end())
        add(IkiCategory::ime_before_flight, up->second, conf.t, prev.id, conf.id);
    }
    if (at + 1 < downs.size()) {
      const auto& next = downs[at + 1]->base;
      add(IkiCategory::ime_after, conf.t, next.t, conf.id, next.id);
      if (auto up = keyup.find(conf.id); up != keyup.end())
        add(IkiCategory::ime_after_flight, up->second, next.t, conf.id, next.id);
    }
    if (previous_confirmation) {
      add(IkiCategory::ime_before_formula, previous_confirmation->base.t,
          tree.children.front().start_t, previous_confirmation->base.id,
          *tree.children.front().children.front().children.front().event_id);
    }
    add(IkiCategory::ime_after_formula, tree.start_t, conf.t, comp.letters.front().id, conf.id);
    previous_confirmation = &comp.confirmation;
    out.trees.push_back(std::move(tree));
  }

  for (std::size_t i = 1; i < words.size(); ++i) {
    add(IkiCategory::word, words[i - 1].end, words[i].start, words[i - 1].last_id,
        words[i].first_id);
  }
  return out;
}

std::vector<IkiSample> classify_alphabetic(std::span<const KeyEvent> keys,
                                           std::u32string_view text) {
  std::vector<IkiSample> out;
  const KeyEvent* prev = nullptr;
  bool space_between = false;
  for (const auto& k : keys) {
    if (!k.is_down()) continue;
    if (k.key.kind() == KeyKind::space) {
      space_between = true;
      continue;
    }
    if (prev) {
      bool between = space_between;
      const auto from = prev->position + static_cast<std::int64_t>(prev->key.symbol().size());
      const auto to = std::min<std::int64_t>(k.position, static_cast<std::int64_t>(text.size()));
      for (auto i = std::max<std::int64_t>(0, from); i < to && !between; ++i)
        between = utf8::is_whitespace(text[static_cast<std::size_t>(i)]);
      out.push_back({between ? IkiCategory::between_word : IkiCategory::within_word,
                     k.t - prev->t, prev->id, k.id});
    }
    prev = &k;
    space_between = false;
  }
  return out;
}

}  // namespace dualtrace
