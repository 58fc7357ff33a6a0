#pragma once

#include <string>
#include <string_view>

namespace dualtrace::utf8 {

// Positions and lengths throughout the library count Unicode scalar values,
// so text is held as std::u32string and converted at the I/O boundary.

/// Throws std::invalid_argument on malformed input.
std::u32string decode(std::string_view bytes);
std::string encode(std::u32string_view text);
std::string encode(char32_t c);

bool is_latin_letter(char32_t c) noexcept;
bool is_ascii_digit(char32_t c) noexcept;
bool is_whitespace(char32_t c) noexcept;
/// CJK unified ideographs (basic block plus extension A) and CJK punctuation.
bool is_cjk(char32_t c) noexcept;

}  // namespace dualtrace::utf8
