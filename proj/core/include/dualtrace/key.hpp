#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace dualtrace {

enum class KeyKind { letter, digit, space, backspace, canc, punct, other };

/// Symbolic key identity. Wire names: a single ASCII letter, digit or
/// punctuation mark, "SPACEBAR", "BACKSPACE", "CANC"; any other label is an
/// OTHER key whose typed symbol is the label itself (e.g. grouped "nd").
class Key {
 public:
  Key() = default;

  static Key parse(std::string_view name);
  static Key letter(char c);
  static Key digit(int d);
  static Key punct(char c);
  static Key space() { return Key(KeyKind::space, "SPACEBAR"); }
  static Key backspace() { return Key(KeyKind::backspace, "BACKSPACE"); }
  static Key canc() { return Key(KeyKind::canc, "CANC"); }
  static Key other(std::string label) { return Key(KeyKind::other, std::move(label)); }

  KeyKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  /// Text the key types into a plain (non-IME) editor; empty for deletions.
  std::u32string symbol() const;

  bool is_confirmation_key() const noexcept {
    return kind_ == KeyKind::space || kind_ == KeyKind::digit;
  }

  friend bool operator==(const Key&, const Key&) = default;

 private:
  Key(KeyKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  KeyKind kind_ = KeyKind::other;
  std::string name_;
};

}  // namespace dualtrace
