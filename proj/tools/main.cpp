#include <iostream>

#include "voxgen/cli.hpp"

int main(int argc, char** argv) {
  return voxgen::cli::run(argc, argv, std::cout, std::cerr);
}
