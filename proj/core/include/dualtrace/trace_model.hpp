#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualtrace/diff.hpp"
#include "dualtrace/key.hpp"

namespace dualtrace {

/// Milliseconds on the session clock. Differences are plain integers.
struct Timestamp {
  std::int64_t ms = 0;

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

inline std::int64_t operator-(Timestamp a, Timestamp b) { return a.ms - b.ms; }
inline Timestamp operator+(Timestamp a, std::int64_t d) { return {a.ms + d}; }

enum class KeyAction { down, up };

struct KeyEvent {
  std::int64_t id = 0;  // shared by a keydown and its keyup
  KeyAction kind = KeyAction::down;
  Key key;
  std::int64_t position = 0;
  Timestamp t;

  bool is_down() const noexcept { return kind == KeyAction::down; }
  friend bool operator==(const KeyEvent&, const KeyEvent&) = default;
};

/// Half-open window [left, right) over document symbols.
struct Dsw {
  std::int64_t left = 0;
  std::int64_t right = 0;

  std::int64_t width() const noexcept { return right - left; }
  bool empty() const noexcept { return left == right; }
  friend bool operator==(const Dsw&, const Dsw&) = default;
};

enum class SnapshotSource { editor, browser };

struct TextSnapshot {
  std::int64_t pass_id = 0;
  std::u32string text;
  Dsw dsw;
  std::int64_t offset = 0;
  Timestamp t;
  SnapshotSource source = SnapshotSource::editor;
  /// Browser snapshots carry the edit script from the previous pass.
  std::optional<DiffDelta> delta;

  friend bool operator==(const TextSnapshot&, const TextSnapshot&) = default;
};

enum class AlignmentStatus { coherent, resolved, unresolved };

namespace rule_names {
inline constexpr const char* syllabic_division = "syllabic_division";
inline constexpr const char* separator_deletion = "separator_deletion";
inline constexpr const char* chinese_punctuation = "chinese_punctuation";
inline constexpr const char* ime_confirmation = "ime_confirmation";
}  // namespace rule_names

struct ImeAnnotation {
  std::u32string text;  // confirmed Chinese string
  std::string pinyin;   // transcription as rendered, with ' separators
  std::int64_t start = 0;
  std::int64_t end = 0;

  friend bool operator==(const ImeAnnotation&, const ImeAnnotation&) = default;
};

/// Solver payloads other than IME annotations.
struct Correction {
  std::optional<std::int64_t> logged_position;  // set when position was rewritten
  std::optional<std::int64_t> deleted;          // symbols removed by one BACKSPACE
  std::optional<std::u32string> rendered;       // symbol actually shown

  bool empty() const noexcept { return !logged_position && !deleted && !rendered; }
  friend bool operator==(const Correction&, const Correction&) = default;
};

struct DualTraceEvent {
  KeyEvent base;
  AlignmentStatus status = AlignmentStatus::coherent;
  std::optional<std::string> rule;  // set iff status == resolved
  std::optional<ImeAnnotation> ime;  // set iff rule == ime_confirmation
  std::optional<Correction> correction;

  bool is_confirmation() const noexcept { return ime.has_value(); }
  friend bool operator==(const DualTraceEvent&, const DualTraceEvent&) = default;
};

/// Document state after one logging pass.
struct PassState {
  std::int64_t pass_id = 0;
  Timestamp t;
  std::u32string text;

  friend bool operator==(const PassState&, const PassState&) = default;
};

}  // namespace dualtrace
