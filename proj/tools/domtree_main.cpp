#include <iostream>
#include <vector>

#include "domtree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return domtree::run_cli(args, std::cout, std::cerr);
}
