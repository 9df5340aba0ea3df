#include <iostream>
#include <string>
#include <vector>

#include "qpart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qpart::run_cli(args, std::cout, std::cerr);
}
