#include <iostream>

#include "sl2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sl2::run_cli(args, std::cin, std::cout, std::cerr);
}
