#include <algorithm>
#include <random>

#include "dualtrace/session_simulator.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace {
namespace {

class Dice {
 public:
  explicit Dice(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

  std::int64_t dwell() { return range(40, 160); }
  std::int64_t gap(std::int64_t dwell) { return std::max<std::int64_t>(1 - dwell, range(-30, 400)); }

 private:
  std::mt19937_64 rng_;
};

const std::u32string kAlphabet = U"abcdefghijklmnopqrstuvwxyz   ,.中文字";

}  // namespace

Script random_edit_script(std::uint64_t seed, const EditScriptOptions& options) {
  Dice dice(seed);
  Script script;
  auto& cfg = script.config;
  const auto initial = dice.range(0, static_cast<std::int64_t>(options.max_initial));
  for (std::int64_t i = 0; i < initial; ++i)
    cfg.initial_text += kAlphabet[static_cast<std::size_t>(
        dice.range(0, static_cast<std::int64_t>(kAlphabet.size()) - 1))];
  cfg.cursor = dice.range(0, initial);
  cfg.start_ms = dice.range(0, 100000);

  std::int64_t length = initial;
  std::int64_t cursor = cfg.cursor;
  std::int64_t anchor = cursor;
  auto drop_selection = [&] {
    length -= std::max(anchor, cursor) - std::min(anchor, cursor);
    cursor = anchor = std::min(anchor, cursor);
  };
  auto key = [&](Key k) {
    const auto dwell = dice.dwell();
    script.actions.emplace_back(action::TypeKey{std::move(k), dwell, dice.gap(dwell)});
  };

  for (std::size_t n = 0; n < options.actions; ++n) {
    const auto roll = dice.range(0, 99);
    if (roll < 50) {
      const char32_t c = kAlphabet[static_cast<std::size_t>(
          dice.range(0, static_cast<std::int64_t>(kAlphabet.size()) - 1))];
      key(c == U' ' ? Key::space() : Key::parse(utf8::encode(c)));
      drop_selection();
      ++length;
      anchor = ++cursor;
    } else if (roll < 62) {
      key(Key::backspace());
      if (anchor != cursor) {
        drop_selection();
      } else if (cursor > 0) {
        --length;
        anchor = --cursor;
      }
    } else if (roll < 70) {
      key(Key::canc());
      if (anchor != cursor) {
        drop_selection();
      } else if (cursor < length) {
        --length;
      }
    } else if (roll < 80) {
      cursor = anchor = dice.range(0, length);
      script.actions.emplace_back(action::MoveCursor{cursor});
    } else if (roll < 87) {
      anchor = dice.range(0, length);
      cursor = dice.range(0, length);
      script.actions.emplace_back(action::Select{anchor, cursor});
    } else {
      script.actions.emplace_back(action::Pass{});
    }
  }
  script.actions.emplace_back(action::Pass{});
  return script;
}

Script random_ime_script(std::uint64_t seed, const Lexicon& lexicon,
                         const ImeScriptOptions& options) {
  Dice dice(seed);
  Script script;
  script.config.layout = Layout::pinyin;
  script.config.start_ms = dice.range(0, 100000);
  const auto keys = lexicon.keys();

  auto& acts = script.actions;
  auto press = [&](Key k, bool confirm = false) {
    const auto dwell = dice.dwell();
    const auto gap = dice.gap(dwell);
    if (confirm) {
      acts.emplace_back(action::ImeConfirm{std::move(k), dwell, gap});
    } else {
      acts.emplace_back(action::TypeKey{std::move(k), dwell, gap});
    }
    acts.emplace_back(action::Pass{});
  };

  const std::string marks = ".,?!:;";
  for (std::size_t w = 0; w < options.words && !keys.empty(); ++w) {
    std::string pinyin = dice.pick(keys);
    if (dice.chance(0.3)) pinyin += dice.pick(keys);
    for (std::size_t i = 0; i < pinyin.size(); ++i) {
      press(Key::letter(pinyin[i]));
      if (dice.chance(0.15)) {
        press(Key::backspace());
        press(Key::letter(pinyin[i]));
      }
    }
    const auto count = lexicon.candidates(pinyin).size();
    if (count == 0) {
      for (std::size_t i = 0; i < pinyin.size(); ++i) press(Key::backspace());
      continue;
    }
    const auto choice = dice.range(0, static_cast<std::int64_t>(std::min<std::size_t>(count, 9)));
    press(choice == 0 ? Key::space() : Key::digit(static_cast<int>(choice)), true);
    if (dice.chance(0.3)) press(Key::punct(marks[static_cast<std::size_t>(dice.range(0, 5))]));
  }
  return script;
}

}  // namespace dualtrace
