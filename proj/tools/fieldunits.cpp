#include <iostream>
#include <string>
#include <vector>

#include "fieldunits/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fieldunits::run_cli(args, std::cout, std::cerr);
}
