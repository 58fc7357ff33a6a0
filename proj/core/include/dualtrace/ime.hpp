#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualtrace/key.hpp"
#include "dualtrace/lexicon.hpp"

namespace dualtrace {

/// What a key does to the document, relative to the cursor: erase
/// `erase_left` symbols before it, then insert `insert`.
struct DocumentEdit {
  std::int64_t erase_left = 0;
  std::u32string insert;

  bool empty() const noexcept { return erase_left == 0 && insert.empty(); }
  friend bool operator==(const DocumentEdit&, const DocumentEdit&) = default;
};

/// Why the IME produced an edit; mirrors the incoherence causes.
enum class ImeEffect {
  none,                 // key had no effect
  passthrough,          // typed or deleted as in a plain editor
  compose,              // letter appended to the transcription
  separator_insertion,  // letter appended after a new ' separator
  compose_delete,       // last transcription letter removed
  separator_deletion,   // letter and the separator before it removed
  punctuation,          // Latin mark rendered as its Chinese counterpart
  confirmation,         // transcription replaced with a candidate
  warning,              // rejected (e.g. digit beyond the candidate list)
};

struct ImeState {
  std::string buffer;    // uncommitted pinyin letters
  std::string rendered;  // buffer with separators, as shown in the document
  std::vector<std::u32string> candidates;
};

struct ImeFeedResult {
  ImeState state;
  DocumentEdit edit;
  ImeEffect effect = ImeEffect::none;
  std::u32string committed;  // confirmation only
  std::string message;       // warning only
};

/// Chinese counterpart of a Latin punctuation mark, if any.
std::optional<char32_t> chinese_punctuation(char32_t latin);

/// Pure transition of the simulated pinyin IME. Letters append to the
/// buffer with a separator whenever the current syllable cannot absorb the
/// letter; BACKSPACE drops one letter plus a separator left dangling before
/// it; SPACEBAR/digit confirm candidates[choice]; punctuation is converted
/// when nothing is being composed.
ImeFeedResult ime_feed(const ImeState& state, const Key& key, const Lexicon& lexicon);

}  // namespace dualtrace
