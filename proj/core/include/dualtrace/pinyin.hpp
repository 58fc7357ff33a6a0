#pragma once

#include <span>
#include <string>
#include <string_view>

namespace dualtrace::pinyin {

inline constexpr char separator = '\'';

/// Legal toneless Mandarin syllables (lower case, "v" for ü).
std::span<const std::string_view> syllables();

bool is_syllable(std::string_view s);
/// True when s is a (possibly complete) prefix of some legal syllable.
bool is_syllable_prefix(std::string_view s);

/// Removes separators.
std::string strip_separators(std::string_view rendered);

}  // namespace dualtrace::pinyin
