#include <iostream>

#include "mvspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvspec::run_cli(args, std::cout, std::cerr);
}
