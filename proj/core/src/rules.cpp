#include <algorithm>

#include "dualtrace/hybridizer.hpp"
#include "dualtrace/ime.hpp"
#include "dualtrace/pinyin.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace {
namespace {

std::size_t index_of(std::int64_t position) { return static_cast<std::size_t>(position); }

RuleMatch make_match(const RuleInput& in, const char* rule, RulePayload payload) {
  return RuleMatch{in.context.incoherent, in.key.id, rule, std::move(payload)};
}

class SyllabicDivision final : public Rule {
 public:
  std::string name() const override { return rule_names::syllabic_division; }

  std::optional<RuleMatch> match(const RuleInput& in) const override {
    if (in.key.key.kind() != KeyKind::letter || !in.states.after) return std::nullopt;
    const auto& after = *in.states.after;
    const auto pos = in.key.position;
    if (pos < 0 || index_of(pos) + 1 >= after.size()) return std::nullopt;
    const char32_t letter = static_cast<unsigned char>(in.key.key.name()[0]);
    if (after[index_of(pos)] != pinyin::separator || after[index_of(pos) + 1] != letter)
      return std::nullopt;
    return make_match(in, rule_names::syllabic_division, payload::PositionShift{pos, 1});
  }
};

class SeparatorDeletion final : public Rule {
 public:
  std::string name() const override { return rule_names::separator_deletion; }

  std::optional<RuleMatch> match(const RuleInput& in) const override {
    if (in.key.key.kind() != KeyKind::backspace || !in.states.before || !in.states.after)
      return std::nullopt;
    const auto& before = *in.states.before;
    const auto pos = in.key.position;
    if (pos < 2 || index_of(pos) > before.size()) return std::nullopt;
    if (before[index_of(pos) - 2] != pinyin::separator) return std::nullopt;
    auto erased = before;
    erased.erase(index_of(pos) - 2, 2);
    if (erased != *in.states.after) return std::nullopt;
    return make_match(in, rule_names::separator_deletion, payload::SeparatorDeletion{pos - 2, 2});
  }
};

class ChinesePunctuation final : public Rule {
 public:
  std::string name() const override { return rule_names::chinese_punctuation; }

  std::optional<RuleMatch> match(const RuleInput& in) const override {
    if (in.key.key.kind() != KeyKind::punct || !in.states.after) return std::nullopt;
    const char32_t latin = static_cast<unsigned char>(in.key.key.name()[0]);
    const auto mark = chinese_punctuation(latin);
    const auto& after = *in.states.after;
    const auto pos = in.key.position;
    if (!mark || pos < 0 || index_of(pos) >= after.size() || after[index_of(pos)] != *mark)
      return std::nullopt;
    return make_match(in, rule_names::chinese_punctuation, payload::Punctuation{latin, *mark});
  }
};

class ImeConfirmation final : public Rule {
 public:
  std::string name() const override { return rule_names::ime_confirmation; }

  std::optional<RuleMatch> match(const RuleInput& in) const override {
    if (!in.key.key.is_confirmation_key() || !in.states.before || !in.states.after ||
        in.sharing != 1)
      return std::nullopt;
    const std::u32string_view before = *in.states.before;
    const std::u32string_view after = *in.states.after;
    const auto limit = std::min(before.size(), after.size());
    std::size_t p = 0;
    while (p < limit && before[p] == after[p]) ++p;
    std::size_t s = 0;
    while (s < limit - p && before[before.size() - 1 - s] == after[after.size() - 1 - s]) ++s;
    const auto removed = before.substr(p, before.size() - s - p);
    const auto inserted = after.substr(p, after.size() - s - p);
    if (removed.empty() || inserted.empty()) return std::nullopt;
    const bool latin = std::all_of(removed.begin(), removed.end(), [](char32_t c) {
      return utf8::is_latin_letter(c) || c == pinyin::separator;
    });
    if (!latin || !std::all_of(inserted.begin(), inserted.end(), utf8::is_cjk))
      return std::nullopt;
    if (in.key.position != static_cast<std::int64_t>(p + removed.size())) return std::nullopt;
    const auto start = static_cast<std::int64_t>(p);
    ImeAnnotation note{std::u32string(inserted), utf8::encode(removed), start,
                       start + static_cast<std::int64_t>(inserted.size())};
    return make_match(in, rule_names::ime_confirmation, payload::Confirmation{std::move(note)});
  }
};

}  // namespace

std::unique_ptr<Rule> make_syllabic_division_rule() { return std::make_unique<SyllabicDivision>(); }
std::unique_ptr<Rule> make_separator_deletion_rule() { return std::make_unique<SeparatorDeletion>(); }
std::unique_ptr<Rule> make_chinese_punctuation_rule() { return std::make_unique<ChinesePunctuation>(); }
std::unique_ptr<Rule> make_ime_confirmation_rule() { return std::make_unique<ImeConfirmation>(); }

RuleSet RuleSet::standard() {
  RuleSet set;
  set.add(make_syllabic_division_rule());
  set.add(make_separator_deletion_rule());
  set.add(make_chinese_punctuation_rule());
  set.add(make_ime_confirmation_rule());
  return set;
}

}  // namespace dualtrace
