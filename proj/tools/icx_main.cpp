#include <iostream>
#include <string>
#include <vector>

#include "icx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return icx::run_cli(args, std::cout, std::cerr);
}
