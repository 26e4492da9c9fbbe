#include <iostream>
#include <string>
#include <vector>

#include "gk/cli.hpp"

int main(int argc, char** argv) {
  return gk::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
