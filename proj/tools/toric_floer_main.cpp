#include <iostream>
#include <string>
#include <vector>

#include "toricfloer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricfloer::run_cli(args, std::cout, std::cerr);
}
