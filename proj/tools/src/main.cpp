#include <iostream>

#include "dualtrace_cli/cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  auto config = dualtrace::cli::parse_args(argc, argv, std::cout, std::cerr, code);
  if (!config) return code;
  return dualtrace::cli::run(*config, std::cout, std::cerr);
}
