#include <iostream>

#include "ontosearch/cli.hpp"

int main(int argc, char** argv) {
  return ontosearch::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
