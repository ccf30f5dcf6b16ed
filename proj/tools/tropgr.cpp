#include <iostream>
#include <string>
#include <vector>

#include "tropgr/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return tropgr::cli_run(args, std::cout, std::cerr);
}
