#include "qtr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = qtr::cli::dispatch(args);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
