#include <iostream>
#include <vector>

#include "ordsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordsemi::run_cli(std::move(args), std::cout, std::cerr);
}
