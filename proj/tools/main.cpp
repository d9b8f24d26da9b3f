#include <iostream>
#include <string>
#include <vector>

#include "seqeff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seqeff::run_cli(args, std::cout, std::cerr);
}
