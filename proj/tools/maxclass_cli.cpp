#include "maxclass/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return maxclass::cli_main(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
