#include <doctest.h>

#include "dualtrace/errors.hpp"
#include "dualtrace/trace_io.hpp"
#include "support.hpp"

using namespace dualtrace;

TEST_CASE("keystroke log round trip") {
  const auto bytes = testing::read_fixture("dianretan.keys.jsonl");
  const auto keys = parse_keystroke_log(bytes);
  CHECK(keys.size() == 20);
  CHECK(keys.front().id == 266);
  CHECK(write_keystroke_log(keys) == bytes);
}

TEST_CASE("text log round trip keeps browser deltas") {
  TextSnapshot a;
  a.text = U"ab";
  a.dsw = {0, 2};
  TextSnapshot b;
  b.pass_id = 3;
  b.t = {5};
  b.source = SnapshotSource::browser;
  b.delta = DiffDelta{EditOp::keep(1), EditOp::del(1), EditOp::ins(U"千")};
  b.offset = 0;
  const std::vector<TextSnapshot> snaps{a, b};
  const auto parsed = parse_text_log(write_text_log(snaps));
  CHECK(parsed == snaps);
}

TEST_CASE("dual trace round trip") {
  const auto bytes = testing::read_fixture("dianretan.dual.jsonl");
  const auto trace = parse_dual_trace(bytes);
  CHECK(write_dual_trace(trace) == bytes);
}

TEST_CASE("malformed keystroke records") {
  auto line = [](const std::string& s) { return s + "\n"; };
  CHECK_THROWS_AS(parse_keystroke_log(line("{not json")), ParseError);
  CHECK_THROWS_AS(parse_keystroke_log(line("[1,2]")), ParseError);
  CHECK_THROWS_AS(parse_keystroke_log(line(R"({"id":1,"kind":"down","key":"a","t_ms":0})")),
                  ParseError);
  CHECK_THROWS_AS(
      parse_keystroke_log(line(R"({"id":1,"kind":"sideways","key":"a","position":0,"t_ms":0})")),
      ParseError);
  CHECK_THROWS_AS(
      parse_keystroke_log(line(R"({"id":1,"kind":"down","key":"a","position":-1,"t_ms":0})")),
      ParseError);
  try {
    parse_keystroke_log("\n" + line(R"({"id":"x","kind":"down","key":"a","position":0,"t_ms":0})"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("keystroke stream integrity") {
  const std::string gap =
      R"({"id":1,"kind":"down","key":"a","position":0,"t_ms":0})"
      "\n"
      R"({"id":3,"kind":"down","key":"b","position":1,"t_ms":5})"
      "\n";
  CHECK_THROWS_AS(parse_keystroke_log(gap), IntegrityError);
  const std::string orphan = R"({"id":1,"kind":"up","key":"a","position":0,"t_ms":0})"
                             "\n";
  CHECK_THROWS_AS(parse_keystroke_log(orphan), IntegrityError);
  const std::string backwards =
      R"({"id":1,"kind":"down","key":"a","position":0,"t_ms":9})"
      "\n"
      R"({"id":1,"kind":"up","key":"a","position":0,"t_ms":3})"
      "\n";
  CHECK_THROWS_AS(parse_keystroke_log(backwards), IntegrityError);
}

TEST_CASE("text log schema") {
  CHECK_THROWS_AS(parse_text_log(""), IntegrityError);
  CHECK_THROWS_AS(
      parse_text_log(R"({"pass":1,"text":"","dsw":[0,0],"offset":0,"t_ms":0})"
                     "\n"),
      IntegrityError);
  CHECK_THROWS_AS(
      parse_text_log(R"({"pass":0,"text":"","dsw":[3,1],"offset":0,"t_ms":0})"
                     "\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse_text_log(R"({"pass":0,"text":"","dsw":[0,0],"offset":0,"t_ms":0,"source":"x"})"
                     "\n"),
      ParseError);
}

TEST_CASE("dual trace schema") {
  const std::string base = R"({"id":1,"kind":"down","key":"a","position":0,"t_ms":0,)";
  CHECK_THROWS_AS(parse_dual_trace(base + R"("status":"resolved"})"
                                          "\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_dual_trace(base + R"("status":"coherent","rule":"x"})"
                                          "\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_dual_trace(base +
                       R"("status":"resolved","rule":"ime_confirmation","ime":{"text":"电","pinyin":"dian","start":0,"end":2}})"
                       "\n"),
      ParseError);
  CHECK_THROWS_AS(parse_dual_trace(base + R"("status":"resolved","rule":"ime_confirmation"})"
                                          "\n"),
                  ParseError);
  CHECK_NOTHROW(parse_dual_trace(base + R"("status":"unresolved"})"
                                        "\n"));
}
