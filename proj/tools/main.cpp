#include <iostream>
#include <string>
#include <vector>

#include "shellkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shellkit::run_cli(args, std::cout, std::cerr);
}
