#include <iostream>

#include "posmap_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return posmap::tools::run(args, std::cout, std::cerr);
}
