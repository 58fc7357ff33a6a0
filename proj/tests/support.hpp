#pragma once

#include <string>

#include "dualtrace/lexicon.hpp"
#include "dualtrace/trace_io.hpp"

namespace testing {

inline std::string fixture(const std::string& name) {
  return std::string(DUALTRACE_FIXTURES) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  return dualtrace::read_file(fixture(name));
}

inline const dualtrace::Lexicon& lexicon() {
  static const auto lex = dualtrace::Lexicon::parse(read_fixture("lexicon.txt"));
  return lex;
}

}  // namespace testing
