#pragma once

#include <stdexcept>
#include <string>

namespace dualtrace {

/// Broad failure classes. The CLI maps each to its own exit code.
enum class ErrorKind {
  parse,          // malformed record or schema violation
  integrity,      // well-formed records that contradict each other
  reconstruction, // snapshot splice or delta outside the prior text
  step,           // DSW step preconditions
  script,         // simulator script invalid at execution time
  hybridization,  // solver conflicts
  analysis,       // segmentation, propagation and tree errors
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what)
      : Error(ErrorKind::integrity, what) {}
};

class ReconstructionError : public Error {
 public:
  explicit ReconstructionError(const std::string& what)
      : Error(ErrorKind::reconstruction, what) {}
};

class StepError : public Error {
 public:
  explicit StepError(const std::string& what) : Error(ErrorKind::step, what) {}
};

class ScriptError : public Error {
 public:
  ScriptError(std::size_t action_index, const std::string& what)
      : Error(ErrorKind::script,
              "action " + std::to_string(action_index) + ": " + what),
        action_index_(action_index) {}

  std::size_t action_index() const noexcept { return action_index_; }

 private:
  std::size_t action_index_;
};

class HybridizationError : public Error {
 public:
  explicit HybridizationError(const std::string& what)
      : Error(ErrorKind::hybridization, what) {}
};

class AnalysisError : public Error {
 public:
  explicit AnalysisError(const std::string& what)
      : Error(ErrorKind::analysis, what) {}
};

}  // namespace dualtrace
