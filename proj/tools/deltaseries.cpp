#include <iostream>

#include "dseries/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dseries::run_cli(args, std::cout, std::cerr);
}
