#include <iostream>

#include "hopfcm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfcm::cli::run(args, std::cout, std::cerr);
}
