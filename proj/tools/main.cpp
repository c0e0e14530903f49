#include <iostream>

#include "dte/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dte::run(args, std::cout, std::cerr);
}
