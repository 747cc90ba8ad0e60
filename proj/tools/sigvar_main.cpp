#include <iostream>
#include <string>
#include <vector>

#include "sigvar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigvar::run_command(args, std::cout, std::cerr);
}
