#include <iostream>
#include <string>
#include <vector>

#include "gfvs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gfvs::run_cli(args, std::cout, std::cerr);
}
