#include <doctest.h>

#include <stdexcept>

#include "dualtrace/key.hpp"
#include "dualtrace/utf8.hpp"

using namespace dualtrace;

TEST_CASE("utf8 round trip keeps scalar positions") {
  const std::string bytes = "A journey 千里之行，始于足下 🙂";
  const auto text = utf8::decode(bytes);
  CHECK(text.size() == 21);
  CHECK(text[10] == U'千');
  CHECK(utf8::encode(text) == bytes);
  CHECK(utf8::encode(U'毯') == "毯");
}

TEST_CASE("malformed utf8 is rejected") {
  CHECK_THROWS_AS(utf8::decode("\xC3"), std::invalid_argument);           // truncated
  CHECK_THROWS_AS(utf8::decode("\xE4\xB8"), std::invalid_argument);       // truncated
  CHECK_THROWS_AS(utf8::decode("\xC0\xAF"), std::invalid_argument);       // overlong
  CHECK_THROWS_AS(utf8::decode("\xED\xA0\x80"), std::invalid_argument);   // surrogate
  CHECK_THROWS_AS(utf8::decode("\xF4\x90\x80\x80"), std::invalid_argument);
  CHECK_THROWS_AS(utf8::decode("\x80"), std::invalid_argument);
  CHECK(utf8::decode("").empty());
}

TEST_CASE("character classes") {
  CHECK(utf8::is_latin_letter(U'q'));
  CHECK(utf8::is_latin_letter(U'Q'));
  CHECK_FALSE(utf8::is_latin_letter(U'\''));
  CHECK(utf8::is_cjk(U'电'));
  CHECK(utf8::is_cjk(U'，'));
  CHECK_FALSE(utf8::is_cjk(U'a'));
  CHECK(utf8::is_whitespace(U' '));
  CHECK(utf8::is_ascii_digit(U'7'));
}

TEST_CASE("key names") {
  CHECK(Key::parse("d").kind() == KeyKind::letter);
  CHECK(Key::parse("SPACEBAR").kind() == KeyKind::space);
  CHECK(Key::parse("BACKSPACE").kind() == KeyKind::backspace);
  CHECK(Key::parse("CANC").kind() == KeyKind::canc);
  CHECK(Key::parse("3").kind() == KeyKind::digit);
  CHECK(Key::parse(",").kind() == KeyKind::punct);
  CHECK(Key::parse("nd").kind() == KeyKind::other);
  CHECK(Key::parse("nd").symbol() == U"nd");
  CHECK(Key::space().symbol() == U" ");
  CHECK(Key::backspace().symbol().empty());
  CHECK(Key::digit(1).is_confirmation_key());
  CHECK(Key::space().is_confirmation_key());
  CHECK_FALSE(Key::letter('a').is_confirmation_key());
  CHECK_THROWS_AS(Key::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Key::letter('1'), std::invalid_argument);
  CHECK_THROWS_AS(Key::digit(10), std::invalid_argument);
}
