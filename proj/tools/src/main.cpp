#include <iostream>
#include <string>
#include <vector>

#include "slh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slh::cli::run(args, std::cout, std::cerr);
}
