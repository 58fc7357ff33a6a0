#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "dualtrace/diff.hpp"
#include "dualtrace/hybridizer.hpp"
#include "dualtrace/lexicon.hpp"
#include "dualtrace/session_simulator.hpp"
#include "dualtrace/snapshot_logger.hpp"
#include "dualtrace/trace_io.hpp"

namespace {

std::u32string random_text(std::mt19937_64& rng, std::size_t n) {
  static constexpr char32_t alphabet[] = U"abcde 千里之行始于足下";
  std::uniform_int_distribution<std::size_t> pick(0, std::size(alphabet) - 2);
  std::u32string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[pick(rng)]);
  return s;
}

std::u32string mutate(std::mt19937_64& rng, std::u32string s, std::size_t edits) {
  for (std::size_t i = 0; i < edits; ++i) {
    std::uniform_int_distribution<std::size_t> at(0, s.size());
    const auto p = at(rng);
    if (rng() % 2 == 0 && p < s.size()) {
      s.erase(p, 1);
    } else {
      s.insert(p, random_text(rng, 1));
    }
  }
  return s;
}

void BM_Diff(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto edits = static_cast<std::size_t>(state.range(1));
  const auto old_text = random_text(rng, len);
  const auto new_text = mutate(rng, old_text, edits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dualtrace::diff(new_text, old_text));
  }
}
BENCHMARK(BM_Diff)->Args({200, 4})->Args({200, 40})->Args({2000, 20})->Args({2000, 400});

void BM_DswReplay(benchmark::State& state) {
  const dualtrace::Lexicon lexicon;
  dualtrace::EditScriptOptions options;
  options.actions = static_cast<std::size_t>(state.range(0));
  const auto script = dualtrace::random_edit_script(11, options);
  const auto session = dualtrace::run_session(script, lexicon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dualtrace::reconstruct(session.snapshots));
  }
  state.counters["passes"] = static_cast<double>(session.snapshots.size());
}
BENCHMARK(BM_DswReplay)->Arg(60)->Arg(600);

void BM_Simulate(benchmark::State& state) {
  const dualtrace::Lexicon lexicon;
  dualtrace::EditScriptOptions options;
  options.actions = static_cast<std::size_t>(state.range(0));
  const auto script = dualtrace::random_edit_script(11, options);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dualtrace::run_session(script, lexicon));
  }
}
BENCHMARK(BM_Simulate)->Arg(60)->Arg(600);

void BM_Hybridize(benchmark::State& state) {
  const auto lexicon = dualtrace::Lexicon::parse(dualtrace::read_file(DUALTRACE_LEXICON_FILE));
  dualtrace::ImeScriptOptions options;
  options.words = static_cast<std::size_t>(state.range(0));
  const auto session = dualtrace::run_session(dualtrace::random_ime_script(5, lexicon, options), lexicon);
  const auto rules = dualtrace::RuleSet::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dualtrace::hybridize(session.keys, session.snapshots, rules));
  }
  state.counters["keys"] = static_cast<double>(session.keys.size());
}
BENCHMARK(BM_Hybridize)->Arg(8)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
