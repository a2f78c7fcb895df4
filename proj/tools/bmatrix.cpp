#include <iostream>
#include <string>
#include <vector>

#include "bmatrix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bmatrix::cli::run(args, std::cout, std::cerr);
}
