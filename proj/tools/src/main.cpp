#include <iostream>

#include "spherotrop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spherotrop::cli::run(args, std::cout, std::cerr);
}
