#include "dualtrace_cli/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualtrace/errors.hpp"
#include "dualtrace/hybridizer.hpp"
#include "dualtrace/lexicon.hpp"
#include "dualtrace/report.hpp"
#include "dualtrace/session_simulator.hpp"
#include "dualtrace/trace_io.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace::cli {
namespace {

struct Failure {
  int code;
  std::string message;
};

int code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::script:
      return parse;
    case ErrorKind::integrity:
    case ErrorKind::reconstruction:
    case ErrorKind::step:
      return integrity;
    case ErrorKind::hybridization:
      return hybridization;
    case ErrorKind::analysis:
      return analysis;
  }
  return analysis;
}

// Runs fn, attributing any library error to `what` (usually a path).
template <typename Fn>
auto about(const std::string& what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Failure{code_for(e.kind()), what + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{parse, what + ": " + e.what()};
  }
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw Failure{io, e.what()};
  }
}

void store(const std::string& path, std::string_view contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
    return;
  }
  try {
    write_file(path, contents);
  } catch (const std::runtime_error& e) {
    throw Failure{io, e.what()};
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Failure{usage, std::string("missing required option ") + flag};
}

Lexicon load_lexicon(const std::string& path) {
  if (path.empty()) return {};
  const auto text = load(path);
  return about(path, [&] { return Lexicon::parse(text); });
}

std::string truth_log(const SessionResult& r) {
  using json = nlohmann::ordered_json;
  std::string out;
  for (const auto& p : r.pass_states) {
    out += json{{"pass", p.pass_id}, {"t_ms", p.t.ms}, {"text", utf8::encode(p.text)}}.dump();
    out += '\n';
  }
  for (const auto& c : r.confirmations) {
    const auto& a = c.annotation;
    out += json{{"confirmation", c.key_id},
                {"text", utf8::encode(a.text)},
                {"pinyin", a.pinyin},
                {"start", a.start},
                {"end", a.end}}
               .dump();
    out += '\n';
  }
  for (const auto& w : r.warnings) out += json{{"warning", w}}.dump() + "\n";
  return out;
}

HybridResult hybridize_files(const RunConfig& c) {
  require(c.in_keys, "--in-keys");
  require(c.in_text, "--in-text");
  const auto key_bytes = load(c.in_keys);
  const auto text_bytes = load(c.in_text);
  const auto keys = about(c.in_keys, [&] { return parse_keystroke_log(key_bytes); });
  const auto snapshots = about(c.in_text, [&] { return parse_text_log(text_bytes); });
  return about(c.in_keys + " + " + c.in_text, [&] { return hybridize(keys, snapshots); });
}

MetricsReport analyze_events(const RunConfig& c, const std::vector<DualTraceEvent>& trace,
                             const std::string& origin) {
  if (c.segmenter == "fmm") require(c.lexicon, "--lexicon (or DUALTRACE_LEXICON)");
  const auto lexicon = load_lexicon(c.lexicon);
  const auto seg = make_segmenter(c.segmenter, lexicon.words());
  return about(origin, [&] { return analyze_trace(trace, *seg, c.outlier_sd); });
}

std::string render(const RunConfig& c, const MetricsReport& report) {
  return c.format == "csv" ? format_csv(report) : format_table(report);
}

void simulate(const RunConfig& c, std::ostream& err) {
  require(c.script, "--script");
  require(c.out_keys, "--out-keys");
  require(c.out_text, "--out-text");
  const auto lexicon = load_lexicon(c.lexicon);
  const auto script_bytes = load(c.script);
  const auto script = about(c.script, [&] { return parse_script(script_bytes); });
  const auto result = about(c.script, [&] { return run_session(script, lexicon); });
  store(c.out_keys, write_keystroke_log(result.keys), err);
  store(c.out_text, write_text_log(result.snapshots), err);
  if (!c.out_truth.empty()) store(c.out_truth, truth_log(result), err);
  if (c.verbose) {
    for (const auto& w : result.warnings) err << "warning: " << w << '\n';
    err << result.keys.size() << " key events, " << result.snapshots.size() << " snapshots\n";
  }
}

void hybridize_cmd(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto result = hybridize_files(c);
  store(c.out, write_dual_trace(result.trace), out);
  const auto diagnostics = result.diagnostics.to_json() + "\n";
  if (!c.diagnostics.empty()) {
    store(c.diagnostics, diagnostics, out);
  } else if (c.verbose) {
    err << diagnostics;
  }
}

void analyze_cmd(const RunConfig& c, std::ostream& out) {
  require(c.in_dual, "--in-dual");
  const auto bytes = load(c.in_dual);
  const auto trace = about(c.in_dual, [&] { return parse_dual_trace(bytes); });
  store(c.out, render(c, analyze_events(c, trace, c.in_dual)), out);
}

void report_cmd(const RunConfig& c, std::ostream& out) {
  const auto result = hybridize_files(c);
  const auto report = analyze_events(c, result.trace, c.in_keys);
  std::string text = "session " + c.in_keys + " + " + c.in_text + "\n";
  text += "diagnostics " + result.diagnostics.to_json() + "\n\n";
  text += render(c, report);
  store(c.out, text, out);
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& code) {
  RunConfig c;
  if (const char* env = std::getenv("DUALTRACE_LEXICON")) c.lexicon = env;

  CLI::App app{"Hybrid keystroke and text logging pipeline"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", c.verbose, "Report warnings and diagnostics on stderr");

  auto* sim = app.add_subcommand("simulate", "Replay a script into keystroke and text logs");
  sim->add_option("--script", c.script, "Editor script (JSON lines)")->required();
  sim->add_option("--out-keys", c.out_keys, "Keystroke log to write")->required();
  sim->add_option("--out-text", c.out_text, "Text log to write")->required();
  sim->add_option("--out-truth", c.out_truth, "Ground truth (pass states, confirmations)");
  sim->add_option("--lexicon", c.lexicon, "Pinyin lexicon");

  auto* hyb = app.add_subcommand("hybridize", "Merge keystroke and text logs into a dual trace");
  hyb->add_option("--in-keys", c.in_keys, "Keystroke log")->required();
  hyb->add_option("--in-text", c.in_text, "Text log")->required();
  hyb->add_option("--out", c.out, "Dual trace to write (default stdout)");
  hyb->add_option("--diagnostics", c.diagnostics, "Diagnostics JSON to write");

  auto* ana = app.add_subcommand("analyze", "Compute IKI metrics from a dual trace");
  ana->add_option("--in-dual", c.in_dual, "Dual trace")->required();

  auto* rep = app.add_subcommand("report", "Hybridize and analyze in one step");
  rep->add_option("--in-keys", c.in_keys, "Keystroke log")->required();
  rep->add_option("--in-text", c.in_text, "Text log")->required();

  for (auto* sub : {ana, rep}) {
    sub->add_option("--out", c.out, "Report to write (default stdout)");
    sub->add_option("--lexicon", c.lexicon, "Pinyin lexicon (word list for fmm)");
    sub->add_option("--outlier-sd", c.outlier_sd, "Outlier threshold in SDs")
        ->check(CLI::PositiveNumber);
    sub->add_option("--segmenter", c.segmenter, "Word segmenter")
        ->check(CLI::IsMember({"fmm", "char"}));
    sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"csv", "table"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err) == 0 ? ok : usage;
    return std::nullopt;
  }
  if (*sim) c.subcommand = Subcommand::simulate;
  if (*hyb) c.subcommand = Subcommand::hybridize;
  if (*ana) c.subcommand = Subcommand::analyze;
  if (*rep) c.subcommand = Subcommand::report;
  code = ok;
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.outlier_sd > 0)) throw Failure{usage, "--outlier-sd must be positive"};
    switch (config.subcommand) {
      case Subcommand::simulate:
        simulate(config, err);
        break;
      case Subcommand::hybridize:
        hybridize_cmd(config, out, err);
        break;
      case Subcommand::analyze:
        analyze_cmd(config, out);
        break;
      case Subcommand::report:
        report_cmd(config, out);
        break;
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return ok;
}

}  // namespace dualtrace::cli
