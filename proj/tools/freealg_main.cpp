#include "freealg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return freealg::run_cli(argc, argv, std::cout, std::cerr);
}
