#include <iostream>

#include "fusionlim/cli/run.hpp"

int main(int argc, char** argv) {
  return fusionlim::cli::main_entry(argc, argv, std::cout, std::cerr);
}
