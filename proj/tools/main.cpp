#include <iostream>
#include <string>
#include <vector>

#include "vreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vreg::cli::run(args, std::cout, std::cerr);
}
