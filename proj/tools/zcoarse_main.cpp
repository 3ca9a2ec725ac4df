#include <iostream>
#include <string>
#include <vector>

#include "zcoarse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zcoarse::cli::run(args, std::cout, std::cerr);
}
