#include <iostream>
#include <string>
#include <vector>

#include "cusps/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return cusps::run_cli(args, std::cout, std::cerr);
}
