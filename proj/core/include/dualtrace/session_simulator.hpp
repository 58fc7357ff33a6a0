#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dualtrace/ime.hpp"
#include "dualtrace/lexicon.hpp"
#include "dualtrace/trace_model.hpp"

namespace dualtrace {

enum class Layout { latin, pinyin };

namespace action {
/// Keydown at the session clock, keyup `dwell` later; the next keydown
/// follows the keyup by `gap` (negative gap = rollover).
struct TypeKey {
  Key key;
  std::int64_t dwell = 80;
  std::int64_t gap = 120;
};
/// SPACEBAR or digit that must commit a non-empty transcription.
struct ImeConfirm {
  Key choice;
  std::int64_t dwell = 80;
  std::int64_t gap = 120;
};
struct MoveCursor {
  std::int64_t index = 0;
};
/// Selection anchored at `start` with the cursor at `end`.
struct Select {
  std::int64_t start = 0;
  std::int64_t end = 0;
};
struct Pass {};
struct SetLayout {
  Layout layout = Layout::latin;
};
}  // namespace action

using EditorAction = std::variant<action::TypeKey, action::ImeConfirm, action::MoveCursor,
                                  action::Select, action::Pass, action::SetLayout>;

struct SessionConfig {
  std::u32string initial_text;
  std::int64_t cursor = 0;
  Layout layout = Layout::latin;
  SnapshotSource source = SnapshotSource::editor;
  std::int64_t first_id = 0;
  std::int64_t start_ms = 0;
};

struct Script {
  SessionConfig config;
  std::vector<EditorAction> actions;
};

struct TrueConfirmation {
  std::int64_t key_id = 0;
  ImeAnnotation annotation;
};

struct SessionResult {
  std::vector<KeyEvent> keys;
  std::vector<TextSnapshot> snapshots;
  /// Ground truth: document after every pass, including passes that
  /// produced no snapshot.
  std::vector<PassState> pass_states;
  std::vector<TrueConfirmation> confirmations;
  /// What each keydown did, keyed by key id.
  std::map<std::int64_t, ImeEffect> effects;
  std::vector<std::string> warnings;
  std::u32string final_text;
};

/// Deterministic replay through a simulated editor and pinyin IME. Passes
/// run DSW logging (or diff logging for browser sessions). A pass is also
/// forced before a cursor move or selection when keys are pending, after it
/// before the next key, and at the end of the session when keys are pending.
/// `start_ms` overrides the script's clock origin when non-negative. Throws
/// ScriptError naming the offending action.
SessionResult run_session(const Script& script, const Lexicon& lexicon,
                          std::int64_t start_ms = -1);

/// Script file: JSON lines. Optional first record
///   {"session":{"init":"..","cursor":n,"layout":"latin|pinyin",
///               "source":"editor|browser","first_id":n,"start_ms":n,"autopass":bool}}
/// then one action per line:
///   {"key":"d","dwell":80,"gap":120}   {"type":"f a t","dwell":..,"gap":..}
///   {"confirm":"1"|"SPACEBAR",..}      {"move":5}   {"select":[2,9]}
///   {"pass":true}                      {"layout":"pinyin"}
/// With autopass every key/confirm is followed by a pass.
Script parse_script(std::string_view text);
std::string write_script(const Script& script);

struct EditScriptOptions {
  std::size_t actions = 60;
  std::size_t max_initial = 30;
};

/// Random Latin editing: typing, BACKSPACE, CANC, cursor moves, selections,
/// replacements and passes at random points.
Script random_edit_script(std::uint64_t seed, const EditScriptOptions& options = {});

struct ImeScriptOptions {
  std::size_t words = 8;
};

/// Random pinyin session over lexicon words that exercises syllabic
/// division, separator deletion, Chinese punctuation and confirmations by
/// SPACEBAR and digits. A pass follows every key.
Script random_ime_script(std::uint64_t seed, const Lexicon& lexicon,
                         const ImeScriptOptions& options = {});

}  // namespace dualtrace
