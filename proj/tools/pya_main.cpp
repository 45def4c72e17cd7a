#include <unistd.h>

#include <iostream>

#include "pya/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pya::cli::run(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
