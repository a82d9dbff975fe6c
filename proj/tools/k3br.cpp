#include <iostream>

#include "k3br/cli.hpp"

int main(int argc, char** argv) {
  return k3br::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
