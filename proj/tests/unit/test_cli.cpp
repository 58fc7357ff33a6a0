#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <sys/wait.h>

#include "dualtrace/trace_io.hpp"
#include "dualtrace_cli/cli.hpp"
#include "support.hpp"

using namespace dualtrace;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dualtrace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = 0;
  auto config = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err, code);
  if (config) code = cli::run(*config, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("dualtrace_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

const std::string lexicon = testing::fixture("lexicon.txt");

}  // namespace

TEST_CASE("simulate, hybridize and analyze the laozi session") {
  Scratch tmp;
  auto sim = invoke({"simulate", "--script", testing::fixture("laozi.script.jsonl"), "--lexicon",
                     lexicon, "--out-keys", tmp("k"), "--out-text", tmp("t"), "--out-truth",
                     tmp("g")});
  REQUIRE(sim.code == cli::ok);
  auto hyb = invoke({"hybridize", "--in-keys", tmp("k"), "--in-text", tmp("t"), "--out", tmp("d")});
  REQUIRE(hyb.code == cli::ok);
  auto ana = invoke({"analyze", "--in-dual", tmp("d"), "--lexicon", lexicon, "--format", "csv"});
  REQUIRE(ana.code == cli::ok);
  CHECK(ana.out.find("\nlatin_letter,16,") != std::string::npos);
  CHECK(ana.out.find("\npinyin_syllable,2,") != std::string::npos);
  CHECK(ana.out.find("\nword,5,") != std::string::npos);
  CHECK(ana.out.find("\nime_before,2,") != std::string::npos);
  CHECK(ana.out.find("\nime_after,1,") != std::string::npos);

  auto rep = invoke({"report", "--in-keys", tmp("k"), "--in-text", tmp("t"), "--lexicon", lexicon,
                     "--format", "csv"});
  REQUIRE(rep.code == cli::ok);
  CHECK(rep.out.find(ana.out) != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  Scratch tmp;
  for (const char* n : {"1", "2"}) {
    REQUIRE(invoke({"simulate", "--script", testing::fixture("dianretan.script.jsonl"),
                    "--lexicon", lexicon, "--out-keys", tmp(std::string("k") + n),
                    "--out-text", tmp(std::string("t") + n)})
                .code == cli::ok);
  }
  CHECK(read_file(tmp("k1")) == read_file(tmp("k2")));
  CHECK(read_file(tmp("t1")) == read_file(tmp("t2")));
  CHECK(read_file(tmp("k1")) == testing::read_fixture("dianretan.keys.jsonl"));
  CHECK(read_file(tmp("t1")) == testing::read_fixture("dianretan.text.jsonl"));
}

TEST_CASE("analyze lists the dianretan resolutions") {
  auto r = invoke({"analyze", "--in-dual", testing::fixture("dianretan.dual.jsonl"), "--lexicon",
                   lexicon});
  REQUIRE(r.code == cli::ok);
  CHECK(r.out.find("resolved 3") != std::string::npos);
  CHECK(r.out.find("syllabic_division 2") != std::string::npos);
  CHECK(r.out.find("ime_confirmation 1") != std::string::npos);
}

TEST_CASE("hybridize writes diagnostics") {
  Scratch tmp;
  auto r = invoke({"hybridize", "--in-keys", testing::fixture("dianretan.keys.jsonl"), "--in-text",
                   testing::fixture("dianretan.text.jsonl"), "--diagnostics", tmp("diag")});
  REQUIRE(r.code == cli::ok);
  CHECK(r.out == testing::read_fixture("dianretan.dual.jsonl"));
  CHECK(read_file(tmp("diag")).find("\"syllabic_division\":2") != std::string::npos);
}

TEST_CASE("exit codes") {
  Scratch tmp;
  CHECK(invoke({}).code == cli::usage);
  CHECK(invoke({"frobnicate"}).code == cli::usage);
  CHECK(invoke({"analyze"}).code == cli::usage);
  CHECK(invoke({"analyze", "--in-dual", "x", "--outlier-sd", "-1"}).code == cli::usage);
  CHECK(invoke({"analyze", "--in-dual", "x", "--segmenter", "jieba"}).code == cli::usage);
  CHECK(invoke({"--help"}).code == cli::ok);

  auto missing = invoke({"analyze", "--in-dual", tmp("absent"), "--segmenter", "char"});
  CHECK(missing.code == cli::io);

  write_file(tmp("bad"), "{\"id\":1}\n");
  auto bad = invoke({"analyze", "--in-dual", tmp("bad"), "--segmenter", "char"});
  CHECK(bad.code == cli::parse);
  CHECK(bad.err.find(tmp("bad")) != std::string::npos);
  CHECK(bad.err.find("line 1") != std::string::npos);

  auto text = testing::read_fixture("dianretan.text.jsonl");
  text.resize(text.rfind('\n', text.size() - 2) + 1);
  write_file(tmp("short"), text);
  auto shorter = invoke({"hybridize", "--in-keys", testing::fixture("dianretan.keys.jsonl"),
                         "--in-text", tmp("short"), "--out", tmp("d")});
  CHECK(shorter.code == cli::integrity);
  CHECK(shorter.err.find("275") != std::string::npos);

  {
    std::string dual;
    std::int64_t id = 0;
    for (char c : std::string("dianretan")) {
      dual += R"({"id":)" + std::to_string(id) + R"(,"kind":"down","key":")" + c +
              R"(","position":0,"t_ms":)" + std::to_string(id * 100) + R"(,"status":"coherent"})" "\n";
      ++id;
    }
    dual += R"({"id":9,"kind":"down","key":"SPACEBAR","position":0,"t_ms":900,"status":"resolved","rule":"ime_confirmation","ime":{"text":"电热","pinyin":"dian're'tan","start":0,"end":2}})" "\n";
    write_file(tmp("mismatch"), dual);
  }
  auto analysis = invoke({"analyze", "--in-dual", tmp("mismatch"), "--lexicon", lexicon});
  CHECK(analysis.code == cli::analysis);

  auto no_lexicon = invoke({"analyze", "--in-dual", testing::fixture("dianretan.dual.jsonl")});
  if (!std::getenv("DUALTRACE_LEXICON")) CHECK(no_lexicon.code == cli::usage);

  write_file(tmp("script"), "{\"move\":3}\n");
  auto script = invoke({"simulate", "--script", tmp("script"), "--out-keys", tmp("k"),
                        "--out-text", tmp("t")});
  CHECK(script.code == cli::parse);
  CHECK(script.err.find("action 0") != std::string::npos);
}

TEST_CASE("installed binary") {
  const char* exe = std::getenv("DUALTRACE_CLI");
  if (!exe) return;
  const auto cmd = std::string(exe) + " analyze --in-dual " +
                   testing::fixture("dianretan.dual.jsonl") + " --segmenter char > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((std::string(exe) + " bogus 2> /dev/null").c_str())) == 1);
}
