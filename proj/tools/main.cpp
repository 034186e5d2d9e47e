#include <iostream>

#include "frieze/cli.hpp"

int main(int argc, char** argv) {
  return frieze::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
