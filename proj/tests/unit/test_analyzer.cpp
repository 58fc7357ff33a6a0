#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "dualtrace/errors.hpp"
#include "dualtrace/hybridizer.hpp"
#include "dualtrace/metrics.hpp"
#include "dualtrace/report.hpp"
#include "dualtrace/session_simulator.hpp"
#include "dualtrace/trace_io.hpp"
#include "dualtrace/utf8.hpp"
#include "support.hpp"

using namespace dualtrace;

namespace {

std::vector<DualTraceEvent> simulate_and_merge(const std::string& script_name) {
  const auto script = parse_script(testing::read_fixture(script_name));
  const auto sim = run_session(script, testing::lexicon());
  return hybridize(sim.keys, sim.snapshots).trace;
}

ForwardMaxMatchSegmenter fmm() { return ForwardMaxMatchSegmenter(testing::lexicon().words()); }

std::string marker(IkiCategory c) {
  switch (c) {
    case IkiCategory::latin_letter: return "●";
    case IkiCategory::pinyin_syllable: return "◆";
    case IkiCategory::word: return "■";
    case IkiCategory::ime_before: return "▲";
    case IkiCategory::ime_after: return "▼";
    default: return "";
  }
}

double naive_mean(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double naive_population_sd(const std::vector<std::int64_t>& v) {
  const double m = naive_mean(v);
  double ss = 0;
  for (auto x : v) ss += (static_cast<double>(x) - m) * (static_cast<double>(x) - m);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

}  // namespace

TEST_CASE("syllable splitting") {
  CHECK(split_syllables("zhe'chan'pin") == std::vector<std::string>{"zhe", "chan", "pin"});
  CHECK(split_syllables("wo") == std::vector<std::string>{"wo"});
  CHECK_THROWS_AS(split_syllables(""), AnalysisError);
  CHECK_THROWS_AS(split_syllables("'wo"), AnalysisError);
  CHECK_THROWS_AS(split_syllables("wo'"), AnalysisError);
  CHECK_THROWS_AS(split_syllables("wo''men"), AnalysisError);
}

TEST_CASE("segmenters") {
  const auto seg = fmm();
  CHECK(seg.segment(U"千里之行") == std::vector<std::u32string>{U"千里", U"之", U"行"});
  CHECK(seg.segment(U"这产品") == std::vector<std::u32string>{U"这", U"产品"});
  CHECK(seg.segment(U"我们好") == std::vector<std::u32string>{U"我们", U"好"});
  CHECK(CharacterSegmenter{}.segment(U"产品") == std::vector<std::u32string>{U"产", U"品"});
  CHECK_THROWS_AS(make_segmenter("jieba", {}), std::invalid_argument);
  CHECK_THROWS_AS(segment_words(U"", seg), AnalysisError);

  struct Lossy final : Segmenter {
    std::vector<std::u32string> segment(std::u32string_view) const override { return {U"x"}; }
  };
  CHECK_THROWS_AS(segment_words(U"产品", Lossy{}), AnalysisError);
}

TEST_CASE("segmentation tree for the zhechanpin trace") {
  const auto trace = parse_dual_trace(testing::read_fixture("zhechanpin.dual.jsonl"));
  const auto scan = locate_compositions(trace);
  REQUIRE(scan.compositions.size() == 1);
  const auto& comp = scan.compositions[0];
  CHECK(comp.confirmation.base.id == 289);
  CHECK(comp.letters.size() == 10);
  const auto tree = build_tree(comp, fmm());
  CHECK(tree.level == NodeLevel::text);
  CHECK(tree.content == U"这产品");
  REQUIRE(tree.children.size() == 2);
  CHECK(tree.children[0].content == U"这");
  CHECK(tree.children[1].content == U"产品");
  std::vector<std::u32string> syllables;
  for (const auto& w : tree.children)
    for (const auto& s : w.children) syllables.push_back(s.content);
  CHECK(syllables == std::vector<std::u32string>{U"zhe", U"chan", U"pin"});
  CHECK(tree.start_t == comp.letters.front().t);
  CHECK(tree.end_t == comp.letters.back().t);
  CHECK(comp.letters.front().id == 279);
  CHECK(comp.letters.back().id == 288);
  const auto& z = tree.children[0].children[0].children[0];
  CHECK(z.level == NodeLevel::letter);
  CHECK(z.event_id == 279);
}

TEST_CASE("tree construction errors") {
  DualTraceEvent conf;
  conf.ime = ImeAnnotation{U"电热", "dian're'tan", 0, 2};
  std::vector<KeyEvent> letters;
  for (char c : std::string("dianretan")) {
    KeyEvent k;
    k.key = Key::letter(c);
    letters.push_back(k);
  }
  CHECK_THROWS_AS(build_tree({conf, letters}, fmm()), AnalysisError);
  letters.pop_back();
  CHECK_THROWS_AS(propagate_timestamps(conf, letters), AnalysisError);
  CHECK_THROWS_AS(propagate_timestamps(DualTraceEvent{}, letters), AnalysisError);
}

TEST_CASE("compositions survive backspaces inside the transcription") {
  Script s;
  s.config.layout = Layout::pinyin;
  for (auto k : {Key::letter('n'), Key::letter('i'), Key::letter('h'), Key::backspace(),
                 Key::letter('h'), Key::letter('a'), Key::letter('o')}) {
    s.actions.push_back(action::TypeKey{k});
    s.actions.push_back(action::Pass{});
  }
  s.actions.push_back(action::ImeConfirm{Key::space()});
  const auto sim = run_session(s, testing::lexicon());
  const auto trace = hybridize(sim.keys, sim.snapshots).trace;
  const auto scan = locate_compositions(trace);
  REQUIRE(scan.compositions.size() == 1);
  std::vector<std::int64_t> ids;
  for (const auto& k : scan.compositions[0].letters) ids.push_back(k.id);
  CHECK(ids == std::vector<std::int64_t>{0, 1, 4, 5, 6});
}

TEST_CASE("unresolved events exclude their confirmation") {
  auto trace = simulate_and_merge("dianretan.script.jsonl");
  for (auto& e : trace) {
    if (e.base.is_down() && e.base.id == 270) {
      e.status = AlignmentStatus::unresolved;
      e.rule.reset();
      e.correction.reset();
    }
  }
  const auto ikis = compute_ikis(trace, fmm());
  CHECK(ikis.excluded_confirmations == 1);
  CHECK(ikis.unresolved_events == 1);
  CHECK(ikis.trees.empty());
  CHECK(ikis.samples.empty());
}

TEST_CASE("laozi category counts and ordering") {
  const auto trace = simulate_and_merge("laozi.script.jsonl");
  const auto ikis = compute_ikis(trace, fmm());
  CHECK(ikis.count(IkiCategory::latin_letter) == 16);
  CHECK(ikis.count(IkiCategory::pinyin_syllable) == 2);
  CHECK(ikis.count(IkiCategory::word) == 5);
  CHECK(ikis.count(IkiCategory::ime_before) == 2);
  CHECK(ikis.count(IkiCategory::ime_after) == 1);
  CHECK(ikis.count(IkiCategory::ime_before_formula) == 1);
  CHECK(ikis.count(IkiCategory::ime_after_formula) == 2);

  std::vector<const KeyEvent*> downs;
  for (const auto& e : trace)
    if (e.base.is_down()) downs.push_back(&e.base);
  std::map<std::pair<std::int64_t, std::int64_t>, std::string> between;
  for (const auto& s : ikis.samples) between[{s.from_id, s.to_id}] += marker(s.category);
  std::string line;
  for (std::size_t i = 0; i < downs.size(); ++i) {
    line += downs[i]->key.name();
    if (i + 1 < downs.size()) line += between[{downs[i]->id, downs[i + 1]->id}];
  }
  CHECK(line == "q●i●a●n◆l●i■z●h●i■x●i●n●g▲1▼,●s●h●i■y●u■z●u◆x●i●a▲1");
  const auto g = downs[12]->id;
  const auto s = downs[15]->id;
  CHECK(between[{g, s}] == "■");
}

TEST_CASE("english sentence alphabetic intervals") {
  const auto keys = parse_keystroke_log(testing::read_fixture("journey.keys.jsonl"));
  const auto samples =
      classify_alphabetic(keys, U"A journey of a thousand miles begins with a single step");
  std::vector<std::int64_t> within, between;
  for (const auto& s : samples)
    (s.category == IkiCategory::within_word ? within : between).push_back(s.value_ms);
  CHECK(between.size() == 10);
  CHECK(within.size() == 27);
  CHECK(mean(between) == doctest::Approx(556.2));
  CHECK(standard_deviation(between) == doctest::Approx(naive_population_sd(between)));
  CHECK(std::abs(standard_deviation(between) - 233.0) <= 3.0);
  CHECK(median(between) == doctest::Approx(456.5));
  std::vector<std::int64_t> non_final(within.begin(), within.end() - 1);
  CHECK(std::abs(mean(non_final) - 258.0) <= 1.0);
}

TEST_CASE("space keys make an interval between words") {
  std::vector<KeyEvent> keys;
  auto add = [&](Key k, std::int64_t pos, std::int64_t t) {
    keys.push_back({static_cast<std::int64_t>(keys.size()), KeyAction::down, k, pos, {t}});
  };
  add(Key::letter('a'), 0, 0);
  add(Key::space(), 1, 100);
  add(Key::letter('b'), 2, 300);
  add(Key::letter('c'), 3, 350);
  const auto samples = classify_alphabetic(keys, U"a bc");
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].category == IkiCategory::between_word);
  CHECK(samples[0].value_ms == 300);
  CHECK(samples[1].category == IkiCategory::within_word);
}

TEST_CASE("descriptive statistics") {
  const std::vector<std::int64_t> even{1, 7, 3, 5};
  CHECK(median(even) == doctest::Approx(4.0));
  CHECK(median(std::vector<std::int64_t>{9, 1, 5}) == doctest::Approx(5.0));
  CHECK(mean(even) == doctest::Approx(4.0));
  CHECK(standard_deviation(even) == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(mean(std::vector<std::int64_t>{}), std::invalid_argument);
  const auto empty = basic_stats(std::vector<std::int64_t>{});
  CHECK(empty.count == 0);
  CHECK_FALSE(empty.mean);
}

TEST_CASE("outlier filter") {
  const std::vector<std::int64_t> v{100, 110, 90, 105, 95, 100, 105, 5000};
  const double m = naive_mean(v);
  const double sd = naive_population_sd(v);
  std::vector<std::int64_t> expected_removed;
  for (auto x : v)
    if (std::abs(static_cast<double>(x) - m) > 2 * sd) expected_removed.push_back(x);
  const auto split = filter_outliers(v);
  CHECK(split.removed == expected_removed);
  CHECK(split.removed == std::vector<std::int64_t>{5000});
  CHECK(split.kept.size() == 7);
  CHECK(filter_outliers(std::vector<std::int64_t>{100, 110, 90, 105, 5000}).removed.empty());
  CHECK(filter_outliers(std::vector<std::int64_t>{4, 4, 4}).removed.empty());
  const auto sum = summarize(v);
  CHECK(sum.outlier_count == 1);
  CHECK(sum.outlier_pct == doctest::Approx(12.5));
  CHECK(sum.filtered.count == 7);
}

TEST_CASE("timing decomposition") {
  std::vector<KeyEvent> keys{
      {0, KeyAction::down, Key::letter('a'), 0, {0}},
      {0, KeyAction::up, Key::letter('a'), 0, {100}},
      {1, KeyAction::down, Key::letter('b'), 1, {150}},
      {2, KeyAction::down, Key::letter('c'), 2, {200}},
      {1, KeyAction::up, Key::letter('b'), 1, {230}},
      {2, KeyAction::up, Key::letter('c'), 2, {260}},
      {3, KeyAction::down, Key::letter('d'), 3, {300}},
  };
  const auto t = decompose_timing(keys);
  CHECK(t.dwell == std::vector<std::int64_t>{100, 80, 60});
  CHECK(t.positive_iki == std::vector<std::int64_t>{50, 40});
  CHECK(t.rollover == std::vector<std::int64_t>{-30});
  REQUIRE(t.diagnostics.size() == 1);
  CHECK(t.diagnostics[0].find("key 3") != std::string::npos);
}

TEST_CASE("metrics report") {
  const auto trace = simulate_and_merge("laozi.script.jsonl");
  const auto seg = fmm();
  const auto report = analyze_trace(trace, seg);
  REQUIRE(report.rows.size() == 12);
  CHECK(report.rows[0].metric == "latin_letter");
  CHECK(report.rows[0].stats.raw.count == 16);
  const auto csv = format_csv(report);
  CHECK(csv.rfind("metric,count,mean,median,sd,", 0) == 0);
  CHECK(csv.find("\nword,5,") != std::string::npos);
  CHECK(format_table(report).find("chinese_punctuation 1") != std::string::npos);
  CHECK(format_csv(analyze_trace(trace, seg)) == csv);

  std::vector<DualTraceEvent> journey;
  for (const auto& k : parse_keystroke_log(testing::read_fixture("journey.keys.jsonl")))
    journey.push_back({k, AlignmentStatus::coherent, {}, {}, {}});
  const auto latin = analyze_trace(journey, seg);
  const auto between = std::find_if(latin.rows.begin(), latin.rows.end(),
                                    [](const MetricsRow& r) { return r.metric == "between_word"; });
  REQUIRE(between != latin.rows.end());
  CHECK(between->stats.raw.count == 10);
}
