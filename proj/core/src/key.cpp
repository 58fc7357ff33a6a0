#include "dualtrace/key.hpp"

#include <cctype>
#include <stdexcept>

#include "dualtrace/utf8.hpp"

namespace dualtrace {

Key Key::parse(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty key name");
  if (name == "SPACEBAR") return space();
  if (name == "BACKSPACE") return backspace();
  if (name == "CANC") return canc();
  if (name.size() == 1) {
    const auto c = static_cast<unsigned char>(name[0]);
    if (std::isalpha(c)) return letter(name[0]);
    if (std::isdigit(c)) return digit(name[0] - '0');
    if (std::ispunct(c)) return punct(name[0]);
  }
  return other(std::string(name));
}

Key Key::letter(char c) {
  if (!std::isalpha(static_cast<unsigned char>(c))) throw std::invalid_argument("not a letter");
  return Key(KeyKind::letter, std::string(1, c));
}

Key Key::digit(int d) {
  if (d < 0 || d > 9) throw std::invalid_argument("digit out of range");
  return Key(KeyKind::digit, std::string(1, static_cast<char>('0' + d)));
}

Key Key::punct(char c) {
  if (!std::ispunct(static_cast<unsigned char>(c))) throw std::invalid_argument("not punctuation");
  return Key(KeyKind::punct, std::string(1, c));
}

std::u32string Key::symbol() const {
  switch (kind_) {
    case KeyKind::space:
      return U" ";
    case KeyKind::backspace:
    case KeyKind::canc:
      return {};
    default:
      return utf8::decode(name_);
  }
}

}  // namespace dualtrace
