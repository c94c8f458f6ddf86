#include <iostream>

#include "dwigner/cli.hpp"

int main(int argc, char** argv) {
  return dwigner::cli::run(argc, argv, std::cout, std::cerr);
}
