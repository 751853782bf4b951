#include <iostream>

#include "multalg/cli/commands.hpp"

int main(int argc, char** argv) {
  return multalg::cli::run(argc, argv, std::cout, std::cerr);
}
