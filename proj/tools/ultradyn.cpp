#include <iostream>

#include "ultradyn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ultradyn::cli::run(args, std::cout, std::cerr);
}
