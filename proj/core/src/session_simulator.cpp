#include "dualtrace/session_simulator.hpp"

#include <algorithm>

#include "dualtrace/errors.hpp"
#include "dualtrace/snapshot_logger.hpp"

namespace dualtrace {
namespace {

class Session {
 public:
  Session(const Script& script, const Lexicon& lexicon, std::int64_t start_ms)
      : script_(script), lexicon_(lexicon) {
    const auto& cfg = script.config;
    doc_ = cfg.initial_text;
    if (cfg.cursor < 0 || cfg.cursor > length())
      throw ScriptError(0, "initial cursor outside the document");
    cursor_ = anchor_ = cfg.cursor;
    layout_ = cfg.layout;
    next_id_ = cfg.first_id;
    start_ = {start_ms >= 0 ? start_ms : cfg.start_ms};
    now_ = start_;
  }

  SessionResult run() {
    begin();
    for (std::size_t i = 0; i < script_.actions.size(); ++i) {
      index_ = i;
      std::visit([this](const auto& a) { apply(a); }, script_.actions[i]);
    }
    if (keys_since_pass_) pass();
    std::stable_sort(result_.keys.begin(), result_.keys.end(),
                     [](const KeyEvent& a, const KeyEvent& b) {
                       if (a.t != b.t) return a.t < b.t;
                       return a.kind == KeyAction::up && b.kind == KeyAction::down;
                     });
    result_.final_text = doc_;
    return std::move(result_);
  }

 private:
  std::int64_t length() const { return static_cast<std::int64_t>(doc_.size()); }
  bool has_selection() const { return anchor_ != cursor_; }
  std::int64_t sel_lo() const { return std::min(anchor_, cursor_); }
  std::int64_t sel_hi() const { return std::max(anchor_, cursor_); }
  bool composing() const { return !ime_.buffer.empty(); }

  void begin() {
    TextSnapshot s = script_.config.source == SnapshotSource::editor
                         ? dsw_.start(doc_, cursor_, sel_lo(), now_)
                         : diff_.start(doc_, now_);
    result_.snapshots.push_back(std::move(s));
    result_.pass_states.push_back({0, now_, doc_});
    last_pass_ = now_;
  }

  void pass() {
    Timestamp t = last_pass_;
    if (last_keydown_) t = std::max(t, *last_keydown_ + 1);
    std::int64_t id = 0;
    std::optional<TextSnapshot> s;
    if (script_.config.source == SnapshotSource::editor) {
      id = dsw_.next_pass_id();
      s = dsw_.pass(doc_, cursor_, sel_lo(), t);
    } else {
      id = diff_.next_pass_id();
      s = diff_.pass(doc_, t);
    }
    if (s) result_.snapshots.push_back(std::move(*s));
    result_.pass_states.push_back({id, t, doc_});
    last_pass_ = t;
    keys_since_pass_ = false;
    pass_before_edit_ = false;
  }

  void erase(std::int64_t at, std::int64_t n) {
    doc_.erase(static_cast<std::size_t>(at), static_cast<std::size_t>(n));
  }

  void insert(const std::u32string& s) {
    doc_.insert(static_cast<std::size_t>(cursor_), s);
    cursor_ += static_cast<std::int64_t>(s.size());
    anchor_ = cursor_;
  }

  void delete_selection() {
    if (!has_selection()) return;
    const auto lo = sel_lo();
    const auto n = sel_hi() - lo;
    if (anchor_ > cursor_) dsw_.note_canc(n);
    erase(lo, n);
    cursor_ = anchor_ = lo;
  }

  void plain(const Key& key) {
    switch (key.kind()) {
      case KeyKind::backspace:
        dsw_.note_backspace();
        if (has_selection()) {
          delete_selection();
        } else if (cursor_ > 0) {
          erase(cursor_ - 1, 1);
          anchor_ = --cursor_;
        }
        break;
      case KeyKind::canc:
        dsw_.note_canc();
        if (has_selection()) {
          delete_selection();
        } else if (cursor_ < length()) {
          erase(cursor_, 1);
        }
        break;
      default:
        delete_selection();
        insert(key.symbol());
    }
  }

  void type(const Key& key, std::int64_t dwell, std::int64_t gap, bool must_confirm) {
    if (dwell < 0) throw ScriptError(index_, "negative dwell");
    if (dwell + gap < 1) throw ScriptError(index_, "dwell + gap must be at least 1 ms");
    if (pass_before_edit_) pass();

    ImeFeedResult fed;
    const bool ime = layout_ == Layout::pinyin;
    if (ime) fed = ime_feed(ime_, key, lexicon_);
    if (must_confirm) {
      if (!ime || !composing()) throw ScriptError(index_, "confirmation without a transcription");
      if (!key.is_confirmation_key()) throw ScriptError(index_, "not a confirmation key");
      if (fed.effect != ImeEffect::confirmation)
        throw ScriptError(index_, "confirmation rejected: " + fed.message);
    }

    const std::int64_t id = next_id_++;
    const std::int64_t position = has_selection() ? sel_lo() : cursor_;
    result_.keys.push_back({id, KeyAction::down, key, position, now_});
    result_.keys.push_back({id, KeyAction::up, key, position, now_ + dwell});
    last_keydown_ = now_;
    now_ = now_ + (dwell + gap);
    keys_since_pass_ = true;

    if (!ime) {
      plain(key);
      result_.effects[id] = ImeEffect::passthrough;
      return;
    }

    switch (fed.effect) {
      case ImeEffect::passthrough:
        plain(key);
        break;
      case ImeEffect::compose:
      case ImeEffect::separator_insertion:
      case ImeEffect::punctuation:
        delete_selection();
        insert(fed.edit.insert);
        break;
      case ImeEffect::compose_delete:
      case ImeEffect::separator_deletion:
        dsw_.note_backspace(fed.edit.erase_left);
        erase(cursor_ - fed.edit.erase_left, fed.edit.erase_left);
        anchor_ = cursor_ -= fed.edit.erase_left;
        break;
      case ImeEffect::confirmation: {
        const auto start = cursor_ - fed.edit.erase_left;
        ImeAnnotation note{fed.committed, ime_.rendered, start,
                           start + static_cast<std::int64_t>(fed.committed.size())};
        dsw_.note_backspace(fed.edit.erase_left);
        erase(start, fed.edit.erase_left);
        anchor_ = cursor_ = start;
        insert(fed.edit.insert);
        result_.confirmations.push_back({id, std::move(note)});
        break;
      }
      case ImeEffect::warning:
        result_.warnings.push_back("key " + std::to_string(id) + ": " + fed.message);
        break;
      case ImeEffect::none:
        break;
    }
    ime_ = std::move(fed.state);
    result_.effects[id] = fed.effect;
  }

  void reposition(std::int64_t anchor, std::int64_t cursor) {
    if (composing()) throw ScriptError(index_, "cursor moved while composing");
    if (anchor < 0 || anchor > length() || cursor < 0 || cursor > length())
      throw ScriptError(index_, "position outside the document (length " +
                                    std::to_string(length()) + ")");
    if (keys_since_pass_) pass();
    anchor_ = anchor;
    cursor_ = cursor;
    pass_before_edit_ = true;
  }

  void apply(const action::TypeKey& a) { type(a.key, a.dwell, a.gap, false); }
  void apply(const action::ImeConfirm& a) { type(a.choice, a.dwell, a.gap, true); }
  void apply(const action::MoveCursor& a) { reposition(a.index, a.index); }
  void apply(const action::Select& a) { reposition(a.start, a.end); }
  void apply(const action::Pass&) { pass(); }
  void apply(const action::SetLayout& a) {
    if (composing()) throw ScriptError(index_, "layout switched while composing");
    layout_ = a.layout;
  }

  const Script& script_;
  const Lexicon& lexicon_;
  SessionResult result_;
  DswLogger dsw_;
  DiffLogger diff_;
  ImeState ime_;
  std::u32string doc_;
  std::int64_t cursor_ = 0;
  std::int64_t anchor_ = 0;
  Layout layout_ = Layout::latin;
  std::int64_t next_id_ = 0;
  Timestamp start_;
  Timestamp now_;
  Timestamp last_pass_;
  std::optional<Timestamp> last_keydown_;
  std::size_t index_ = 0;
  bool keys_since_pass_ = false;
  bool pass_before_edit_ = false;
};

}  // namespace

SessionResult run_session(const Script& script, const Lexicon& lexicon, std::int64_t start_ms) {
  return Session(script, lexicon, start_ms).run();
}

}  // namespace dualtrace
