#include <iostream>

#include "nikolskii/cli/run.hpp"

int main(int argc, char** argv) {
  return nikolskii::cli::main_entry(argc, argv, std::cout, std::cerr);
}
