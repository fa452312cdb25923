#include <iostream>
#include <string>
#include <vector>

#include "pauli_ds_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pauli_ds::cli::run(args, std::cout, std::cerr);
}
