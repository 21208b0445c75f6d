#include <iostream>

#include "pitshot/cli.hpp"

int main(int argc, char** argv) {
  return pitshot::cli::run(argc, argv, std::cout, std::cerr);
}
