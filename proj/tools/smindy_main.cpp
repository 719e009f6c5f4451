#include <iostream>

#include "smindy/cli.hpp"

int main(int argc, char** argv) {
  return smindy::run_cli(argc, argv, std::cout, std::cerr);
}
