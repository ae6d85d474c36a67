#include <iostream>

#include "mapenum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mapenum::run_cli(args, std::cout, std::cerr);
}
