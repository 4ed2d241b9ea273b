#include <iostream>
#include <string>
#include <vector>

#include "areawalk_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return areawalk::cli::run(args, std::cout, std::cerr);
}
