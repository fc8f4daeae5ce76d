#include <iostream>
#include <string>
#include <vector>

#include "su2branch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return su2b::cli::run(args, std::cout, std::cerr);
}
