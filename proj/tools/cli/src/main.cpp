#include <iostream>

#include "pmaps_cli/commands.hpp"

int main(int argc, char** argv) {
  return pmaps::cli::run(argc, argv, std::cout, std::cerr);
}
