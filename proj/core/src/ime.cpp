#include "dualtrace/ime.hpp"

#include "dualtrace/pinyin.hpp"

namespace dualtrace {
namespace {

ImeFeedResult warn(const ImeState& state, std::string message) {
  ImeFeedResult r;
  r.state = state;
  r.effect = ImeEffect::warning;
  r.message = std::move(message);
  return r;
}

std::u32string ascii(std::string_view s) { return {s.begin(), s.end()}; }

}  // namespace

std::optional<char32_t> chinese_punctuation(char32_t latin) {
  switch (latin) {
    case U'.': return U'。';
    case U',': return U'，';
    case U'?': return U'？';
    case U'!': return U'！';
    case U':': return U'：';
    case U';': return U'；';
    default: return std::nullopt;
  }
}

ImeFeedResult ime_feed(const ImeState& state, const Key& key, const Lexicon& lexicon) {
  ImeFeedResult r;
  r.state = state;
  const bool lower_letter =
      key.kind() == KeyKind::letter && key.name()[0] >= 'a' && key.name()[0] <= 'z';

  if (state.buffer.empty()) {
    if (lower_letter) {
      r.state.buffer = key.name();
      r.state.rendered = key.name();
      r.state.candidates = lexicon.candidates(r.state.buffer);
      r.edit.insert = ascii(key.name());
      r.effect = ImeEffect::compose;
      return r;
    }
    if (key.kind() == KeyKind::punct) {
      if (auto mark = chinese_punctuation(static_cast<unsigned char>(key.name()[0]))) {
        r.edit.insert = std::u32string(1, *mark);
        r.effect = ImeEffect::punctuation;
        return r;
      }
    }
    r.effect = ImeEffect::passthrough;
    return r;
  }

  if (lower_letter) {
    const auto sep = state.rendered.rfind(pinyin::separator);
    const std::string segment =
        sep == std::string::npos ? state.rendered : state.rendered.substr(sep + 1);
    r.state.buffer += key.name();
    if (pinyin::is_syllable_prefix(segment + key.name())) {
      r.state.rendered += key.name();
      r.edit.insert = ascii(key.name());
      r.effect = ImeEffect::compose;
    } else {
      r.state.rendered += pinyin::separator;
      r.state.rendered += key.name();
      r.edit.insert = ascii(std::string(1, pinyin::separator) + key.name());
      r.effect = ImeEffect::separator_insertion;
    }
    r.state.candidates = lexicon.candidates(r.state.buffer);
    return r;
  }

  switch (key.kind()) {
    case KeyKind::backspace: {
      r.state.buffer.pop_back();
      r.state.rendered.pop_back();
      r.edit.erase_left = 1;
      r.effect = ImeEffect::compose_delete;
      if (!r.state.rendered.empty() && r.state.rendered.back() == pinyin::separator) {
        r.state.rendered.pop_back();
        r.edit.erase_left = 2;
        r.effect = ImeEffect::separator_deletion;
      }
      r.state.candidates = lexicon.candidates(r.state.buffer);
      return r;
    }
    case KeyKind::space:
    case KeyKind::digit: {
      std::size_t choice = 0;
      if (key.kind() == KeyKind::digit) {
        const int d = key.name()[0] - '0';
        choice = d == 0 ? 9 : static_cast<std::size_t>(d - 1);
      }
      if (choice >= state.candidates.size())
        return warn(state, "no candidate " + std::to_string(choice + 1) + " for '" +
                               state.rendered + "'");
      r.committed = state.candidates[choice];
      r.edit.erase_left = static_cast<std::int64_t>(state.rendered.size());
      r.edit.insert = r.committed;
      r.effect = ImeEffect::confirmation;
      r.state = ImeState{};
      return r;
    }
    case KeyKind::punct:
      return warn(state, "punctuation '" + key.name() + "' while composing");
    default:
      return warn(state, "key '" + key.name() + "' ignored while composing");
  }
}

}  // namespace dualtrace
