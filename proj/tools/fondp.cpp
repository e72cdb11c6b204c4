#include <iostream>

#include "fondplus/cli.hpp"

int main(int argc, char** argv) {
  return fondplus::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
