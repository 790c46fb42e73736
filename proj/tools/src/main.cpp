#include "wbary/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wbary::cli::run(args, std::cin, std::cout, std::cerr);
}
