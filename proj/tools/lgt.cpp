#include <iostream>
#include <string>
#include <vector>

#include "lgt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lgt::run_cli(args, std::cout, std::cerr);
}
