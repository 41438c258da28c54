#include <iostream>

#include "dyck/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return dyck::cli::run(argc, argv, std::cout, std::cerr);
}
