#include <iostream>
#include <string>
#include <vector>

#include "fedosov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fedosov::run_cli(args, std::cout, std::cerr);
}
