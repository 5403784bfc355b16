#include <iostream>
#include <string>
#include <vector>

#include "unfold/cli.hpp"

int main(int argc, char** argv) {
  return unfold::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
