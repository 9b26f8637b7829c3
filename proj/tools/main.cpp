#include <iostream>
#include <string>
#include <vector>

#include "bijenum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bijenum::cli::dispatch(args, std::cout, std::cerr);
}
