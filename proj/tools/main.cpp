#include <iostream>

#include "higman/cli.hpp"

int main(int argc, char** argv) {
  return higman::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
