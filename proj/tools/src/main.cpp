#include <iostream>

#include "hardylab/cli/cli.hpp"

int main(int argc, char** argv) {
  return hardylab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
