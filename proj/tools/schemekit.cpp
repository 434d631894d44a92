#include <iostream>
#include <string>
#include <vector>

#include "schemekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return schemekit::run_command(args, std::cout, std::cerr);
}
