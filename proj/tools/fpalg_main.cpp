#include <iostream>
#include <string>
#include <vector>

#include "fpalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fpalg::run_cli(args, std::cout);
}
