#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const nalg::cli::CommandResult r = nalg::cli::run(args);
  std::cout << r.output;
  std::cerr << r.error;
  return r.exit_code;
}
