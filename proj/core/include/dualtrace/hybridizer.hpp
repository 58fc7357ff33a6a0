#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dualtrace/trace_model.hpp"

namespace dualtrace {

struct CoherenceWindow {
  std::int64_t start_id = 0;  // inclusive keydown ids
  std::int64_t end_id = 0;
  bool coherent = true;

  friend bool operator==(const CoherenceWindow&, const CoherenceWindow&) = default;
};

inline constexpr const char* cause_no_text_window = "no_text_window";
inline constexpr const char* cause_mismatch = "mismatch";

struct CoherenceReport {
  std::vector<CoherenceWindow> windows;  // tile the keydown id range
  std::map<std::int64_t, std::string> causes;  // incoherent ids only
};

/// Text states a keydown is checked against: the latest state stamped at or
/// before the keydown and the first one stamped strictly after it.
struct AlignedStates {
  const std::u32string* before = nullptr;
  const std::u32string* after = nullptr;
};

AlignedStates align(const KeyEvent& keydown, std::span<const PassState> states);

/// A keydown is coherent when the text after it shows the key's effect at
/// the logged position: its symbol for typing keys, one symbol removed at
/// position-1 for BACKSPACE, one removed at position for CANC.
CoherenceReport check_coherence(std::span<const KeyEvent> keys,
                                std::span<const PassState> states);

struct TripleContext {
  std::optional<CoherenceWindow> preceding;
  CoherenceWindow incoherent;
  std::optional<CoherenceWindow> following;
};

namespace payload {
struct PositionShift {
  std::int64_t separator_index = 0;
  std::int64_t shift = 1;
};
struct SeparatorDeletion {
  std::int64_t separator_index = 0;
  std::int64_t deleted = 2;
};
struct Punctuation {
  char32_t latin = 0;
  char32_t chinese = 0;
};
struct Confirmation {
  ImeAnnotation annotation;
};
}  // namespace payload

using RulePayload = std::variant<payload::PositionShift, payload::SeparatorDeletion,
                                 payload::Punctuation, payload::Confirmation>;

struct RuleMatch {
  CoherenceWindow window;
  std::int64_t event_id = 0;
  std::string rule;
  RulePayload payload;
};

struct RuleInput {
  const KeyEvent& key;
  AlignedStates states;
  const TripleContext& context;
  /// Keydowns aligned to the same `after` state, this one included.
  std::size_t sharing = 1;
};

/// Pattern-matching rule for one incoherent keydown.
class Rule {
 public:
  virtual ~Rule() = default;
  virtual std::string name() const = 0;
  virtual std::optional<RuleMatch> match(const RuleInput& input) const = 0;
};

/// Ordered rule list; the first match wins.
class RuleSet {
 public:
  /// syllabic division, separator deletion, Chinese punctuation, IME confirmation.
  static RuleSet standard();

  void add(std::unique_ptr<Rule> rule) { rules_.push_back(std::move(rule)); }
  std::span<const std::unique_ptr<Rule>> rules() const noexcept { return rules_; }

 private:
  std::vector<std::unique_ptr<Rule>> rules_;
};

std::unique_ptr<Rule> make_syllabic_division_rule();
std::unique_ptr<Rule> make_separator_deletion_rule();
std::unique_ptr<Rule> make_chinese_punctuation_rule();
std::unique_ptr<Rule> make_ime_confirmation_rule();

std::vector<RuleMatch> find_solutions(const CoherenceReport& report,
                                      std::span<const KeyEvent> keys,
                                      std::span<const PassState> states,
                                      const RuleSet& rules = RuleSet::standard());

/// Rewrites the keystroke log into the dual trace. An incoherent window is
/// resolved only when every keydown in it has a match. Throws
/// HybridizationError when two matches target the same event.
std::vector<DualTraceEvent> solve(std::span<const KeyEvent> keys, const CoherenceReport& report,
                                  std::span<const RuleMatch> matches);

struct HybridDiagnostics {
  std::size_t keydowns = 0;
  std::size_t coherent = 0;
  std::size_t unresolved = 0;
  std::map<std::string, std::size_t> resolved;  // per rule
  std::vector<std::int64_t> unresolved_ids;

  std::size_t resolved_total() const noexcept;
  /// Structured text (one JSON object).
  std::string to_json() const;
};

HybridDiagnostics diagnose(std::span<const DualTraceEvent> trace);

struct HybridResult {
  std::vector<DualTraceEvent> trace;
  CoherenceReport coherence;
  std::vector<RuleMatch> matches;
  HybridDiagnostics diagnostics;
};

/// reconstruct -> check_coherence -> find_solutions -> solve. Throws
/// IntegrityError when a keydown has no text event after it.
HybridResult hybridize(std::span<const KeyEvent> keys, std::span<const TextSnapshot> snapshots,
                       const RuleSet& rules = RuleSet::standard());

}  // namespace dualtrace
