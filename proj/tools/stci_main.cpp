#include <iostream>

#include "stci/cli.hpp"

int main(int argc, char** argv) {
  return stci::run_cli(argc, argv, std::cout, std::cerr);
}
