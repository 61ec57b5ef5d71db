#include <iostream>
#include <string>
#include <vector>

#include "fsusy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fsusy::run_cli(args, std::cout, std::cerr);
}
