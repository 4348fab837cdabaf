#include <iostream>
#include <string>
#include <vector>

#include "expcycles/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return expcycles::cli_dispatch(args, std::cout, std::cerr);
}
