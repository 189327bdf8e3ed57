#include <iostream>
#include <vector>

#include "homcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homcat::cli_run(args, std::cout, std::cerr);
}
