#include <iostream>

#include "helisurf/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return helisurf::cli::run(argc, argv, std::cout, std::cerr);
}
