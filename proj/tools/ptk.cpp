#include <iostream>

#include "ptk/cli.hpp"

int main(int argc, char** argv) {
  return ptk::cli::run(argc, argv, std::cout, std::cerr);
}
