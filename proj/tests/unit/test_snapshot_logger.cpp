#include <doctest.h>

#include "dualtrace/errors.hpp"
#include "dualtrace/session_simulator.hpp"
#include "dualtrace/snapshot_logger.hpp"
#include "support.hpp"

using namespace dualtrace;

namespace {

DswStepInput input(Dsw dsw, std::int64_t cursor, std::int64_t len, std::int64_t prev_len) {
  DswStepInput in;
  in.dsw = dsw;
  in.cursor = in.selection_start = cursor;
  in.doc_length = len;
  in.prev_doc_length = prev_len;
  return in;
}

}  // namespace

TEST_CASE("an idle pass produces no snapshot") {
  const auto r = dsw_step(input({11, 11}, 11, 11, 11), U"A joirney o", {5}, 1);
  CHECK_FALSE(r.snapshot);
  CHECK(r.next == Dsw{11, 11});
}

TEST_CASE("typing grows the window to the cursor") {
  const auto r = dsw_step(input({11, 11}, 16, 16, 11), U"A joirney of a t", {9}, 2);
  REQUIRE(r.snapshot);
  CHECK(r.snapshot->text == U"f a t");
  CHECK(r.snapshot->dsw == Dsw{11, 16});
  CHECK(r.snapshot->offset == 5);
  CHECK(r.next == Dsw{16, 16});
}

TEST_CASE("backspace counter pulls the left bound") {
  auto in = input({5, 5}, 5, 16, 16);
  in.back_counter = 1;
  const auto r = dsw_step(in, U"A journey of a t", {0}, 4);
  REQUIRE(r.snapshot);
  CHECK(r.snapshot->dsw == Dsw{4, 5});
  CHECK(r.snapshot->text == U"u");
}

TEST_CASE("pure deletions log an empty window") {
  auto in = input({4, 4}, 2, 2, 4);
  in.back_counter = 2;
  const auto r = dsw_step(in, U"ab", {0}, 1);
  REQUIRE(r.snapshot);
  CHECK(r.snapshot->dsw == Dsw{2, 2});
  CHECK(r.snapshot->offset == -2);
  CHECK(splice_snapshot(U"abcd", *r.snapshot) == U"ab");
}

TEST_CASE("a CANC alone still produces a snapshot") {
  auto in = input({1, 1}, 1, 3, 4);
  in.canc_counter = 1;
  const auto r = dsw_step(in, U"acd", {0}, 1);
  REQUIRE(r.snapshot);
  CHECK(r.snapshot->dsw.empty());
  CHECK(splice_snapshot(U"abcd", *r.snapshot) == U"acd");
}

TEST_CASE("invalid step inputs throw before any state change") {
  CHECK_THROWS_AS(dsw_step(input({3, 2}, 0, 0, 0), U"", {0}, 1), StepError);
  CHECK_THROWS_AS(dsw_step(input({0, 0}, 5, 3, 3), U"abc", {0}, 1), StepError);
  CHECK_THROWS_AS(dsw_step(input({0, 0}, 0, 4, 4), U"abc", {0}, 1), StepError);
  auto neg = input({0, 0}, 0, 0, 0);
  neg.back_counter = -1;
  CHECK_THROWS_AS(dsw_step(neg, U"", {0}, 1), StepError);
}

TEST_CASE("splice errors name the pass") {
  TextSnapshot s;
  s.pass_id = 7;
  s.dsw = {3, 5};
  s.text = U"xy";
  try {
    splice_snapshot(U"abc", s);
    FAIL("expected a reconstruction error");
  } catch (const ReconstructionError& e) {
    CHECK(std::string(e.what()).find("pass 7") != std::string::npos);
  }
}

TEST_CASE("six-pass script") {
  const auto script = parse_script(testing::read_fixture("six_pass.script.jsonl"));
  const auto result = run_session(script, Lexicon{});
  const auto& snaps = result.snapshots;
  REQUIRE(snaps.size() == 6);
  CHECK(snaps[0].pass_id == 0);
  CHECK(snaps[1].pass_id == 2);
  CHECK(snaps[1].text == U"f a t");
  CHECK(snaps[1].dsw == Dsw{11, 16});
  CHECK(snaps[2].dsw == Dsw{5, 16});
  CHECK(snaps[3].text == U"u");
  CHECK(snaps[3].dsw == Dsw{4, 5});
  CHECK(snaps[4].text == U"journey");
  CHECK(snaps[4].dsw == Dsw{2, 9});
  CHECK(snaps[5].dsw == Dsw{2, 9});
  CHECK(snaps[5].text == U"travel ");
  CHECK(snaps[5].offset == -1);
  const auto states = reconstruct(snaps);
  CHECK(states.back().text == U"A travel of a t");
  CHECK(result.final_text == U"A travel of a t");
}

TEST_CASE("diff logger replays through deltas") {
  DiffLogger log;
  std::vector<TextSnapshot> snaps{log.start(U"abc", {0})};
  CHECK_FALSE(log.pass(U"abc", {1}));
  snaps.push_back(*log.pass(U"abXc", {2}));
  snaps.push_back(*log.pass(U"千c", {3}));
  CHECK(snaps[1].pass_id == 2);
  CHECK(snaps[1].source == SnapshotSource::browser);
  const auto states = reconstruct(snaps);
  CHECK(states[1].text == U"abXc");
  CHECK(states[2].text == U"千c");
}

TEST_CASE("reconstruct validates ordering") {
  std::vector<TextSnapshot> snaps(2);
  snaps[0].pass_id = 1;
  CHECK_THROWS_AS(reconstruct(snaps), IntegrityError);
  snaps[0].pass_id = 0;
  snaps[1].pass_id = 0;
  CHECK_THROWS_AS(reconstruct(snaps), IntegrityError);
  snaps[1].pass_id = 1;
  snaps[0].t = {10};
  CHECK_THROWS_AS(reconstruct(snaps), IntegrityError);
}
