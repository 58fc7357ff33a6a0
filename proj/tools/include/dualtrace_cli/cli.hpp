#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dualtrace::cli {

enum ExitCode : int {
  ok = 0,
  usage = 1,
  parse = 2,
  integrity = 3,
  hybridization = 4,
  analysis = 5,
  io = 6,
};

enum class Subcommand { simulate, hybridize, analyze, report };

struct RunConfig {
  Subcommand subcommand = Subcommand::report;
  std::string script;
  std::string in_keys;
  std::string in_text;
  std::string in_dual;
  std::string out;        // dual trace, metrics, or summary; stdout when empty
  std::string out_keys;
  std::string out_text;
  std::string out_truth;
  std::string diagnostics;
  std::string lexicon;
  double outlier_sd = 2.0;
  std::string segmenter = "fmm";
  std::string format = "table";
  bool verbose = false;
};

/// Parses argv. On --help or a usage error the message is written to `out`
/// or `err` and the returned value is empty; `code` then holds the exit status.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& code);

/// Runs one subcommand. Errors are reported on `err` prefixed with the file
/// they concern, and mapped onto ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dualtrace::cli
