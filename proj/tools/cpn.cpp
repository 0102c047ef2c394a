#include <iostream>

#include "cpn/cli/app.hpp"

int main(int argc, char** argv) {
  return cpn::cli::run(argc, argv, std::cout, std::cerr);
}
