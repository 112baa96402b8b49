#include <iostream>
#include <string>
#include <vector>

#include "insdel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return insdel::cli_dispatch(args, std::cout, std::cerr);
}
